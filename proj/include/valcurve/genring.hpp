#ifndef VALCURVE_GENRING_HPP
#define VALCURVE_GENRING_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "valcurve/curve.hpp"
#include "valcurve/element.hpp"
#include "valcurve/errors.hpp"
#include "valcurve/gamma.hpp"

namespace valcurve {

// Monomial prod_i x_i^{e_i} y_i^{f_i} over an arity-n profile; canonical
// forms keep every f_i <= 1.
struct Monomial {
    std::vector<unsigned> xe;
    std::vector<unsigned char> ye;

    static Monomial unit(std::size_t n) { return Monomial{std::vector<unsigned>(n, 0),
                                                          std::vector<unsigned char>(n, 0)}; }
    static Monomial x_var(std::size_t n, std::size_t i, unsigned e = 1) {
        Monomial m = unit(n);
        m.xe[i] = e;
        return m;
    }
    static Monomial y_var(std::size_t n, std::size_t i) {
        Monomial m = unit(n);
        m.ye[i] = 1;
        return m;
    }

    std::size_t arity() const { return xe.size(); }
    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned e : xe) d += e;
        for (unsigned char f : ye) d += f;
        return d;
    }

    auto operator<=>(const Monomial&) const = default;

    std::string str(const char* xname = "x", const char* yname = "y") const;
};

// y_i^2 = c3 x^3 + c2 x^2 + c1 x + c0 + (l1 x + l0) y, per variable pair.
template <class C>
struct PairRelation {
    C c3, c2, c1, c0, l1, l0;
};

// Canonical-form element of the coordinate ring in n independent pairs:
// a finite Monomial -> coefficient map with no y-exponent above 1.
template <class C>
class BasisPoly {
public:
    explicit BasisPoly(std::size_t arity = 0) : arity_(arity) {}

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, C>& terms() const { return terms_; }

    void add_term(const Monomial& m, const C& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Adds c * prod x^e y^f, reducing any y-exponent >= 2 through the
    // per-pair relations.
    void add_reduced(const std::vector<unsigned>& xe, const std::vector<unsigned>& ye,
                     const C& c, const std::vector<PairRelation<C>>& rel) {
        if (c.is_zero()) return;
        std::size_t i = 0;
        for (; i < arity_; ++i)
            if (ye[i] >= 2) break;
        if (i == arity_) {
            Monomial m{xe, {}};
            m.ye.reserve(arity_);
            for (unsigned f : ye) m.ye.push_back(static_cast<unsigned char>(f));
            add_term(m, c);
            return;
        }
        std::vector<unsigned> f2 = ye;
        f2[i] -= 2;
        const PairRelation<C>& r = rel[i];
        struct Part {
            const C* coeff;
            unsigned dx;
            unsigned dy;
        };
        const Part parts[] = {{&r.c3, 3, 0}, {&r.c2, 2, 0}, {&r.c1, 1, 0},
                              {&r.c0, 0, 0}, {&r.l1, 1, 1}, {&r.l0, 0, 1}};
        for (const Part& p : parts) {
            if (p.coeff->is_zero()) continue;
            std::vector<unsigned> e2 = xe;
            std::vector<unsigned> f3 = f2;
            e2[i] += p.dx;
            f3[i] += p.dy;
            add_reduced(e2, f3, c * *p.coeff, rel);
        }
    }

    friend BasisPoly operator+(const BasisPoly& a, const BasisPoly& b) {
        BasisPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend BasisPoly operator-(const BasisPoly& a, const BasisPoly& b) {
        BasisPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    BasisPoly operator-() const {
        BasisPoly r(arity_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    BasisPoly scaled(const C& s) const {
        BasisPoly r(arity_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    static BasisPoly mul(const BasisPoly& a, const BasisPoly& b,
                         const std::vector<PairRelation<C>>& rel) {
        BasisPoly r(a.arity_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                std::vector<unsigned> e(a.arity_), f(a.arity_);
                for (std::size_t i = 0; i < a.arity_; ++i) {
                    e[i] = ma.xe[i] + mb.xe[i];
                    f[i] = static_cast<unsigned>(ma.ye[i]) + mb.ye[i];
                }
                r.add_reduced(e, f, ca * cb, rel);
            }
        return r;
    }

    static BasisPoly pow(const BasisPoly& a, unsigned e,
                         const std::vector<PairRelation<C>>& rel, const C& one) {
        BasisPoly r(a.arity_);
        r.add_term(Monomial::unit(a.arity_), one);
        BasisPoly base = a;
        while (e) {
            if (e & 1) r = mul(r, base, rel);
            base = mul(base, base, rel);
            e >>= 1;
        }
        return r;
    }

    bool operator==(const BasisPoly& o) const {
        if (arity_ != o.arity_ || terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        return true;
    }
    bool operator!=(const BasisPoly& o) const { return !(*this == o); }

    std::string str(const char* xname = "x", const char* yname = "y") const;

private:
    std::size_t arity_;
    std::map<Monomial, C> terms_;
};

using CanonicalPoly = BasisPoly<ValuedElement>;
using ResidueCurvePoly = BasisPoly<FieldElem>;

struct RatExpr {
    CanonicalPoly num;
    CanonicalPoly den;

    RatExpr(CanonicalPoly n, CanonicalPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw DivisionByZero("RatExpr with zero denominator");
    }
};

// Profile of n jointly independent generic pairs over one curve; pair i
// carries weight gamma_i on x and (3/2) gamma_i on y. General-form curves
// support gamma = 0 only.
class GenericProfile {
public:
    GenericProfile(ShortWeierstrass curve, std::vector<GammaValue> gammas);
    GenericProfile(GeneralWeierstrass curve, std::size_t arity);

    std::size_t arity() const { return gammas_.size(); }
    const GammaValue& gamma(std::size_t i) const { return gammas_[i]; }
    bool is_short() const { return short_.has_value(); }
    const ShortWeierstrass& short_curve() const { return *short_; }
    const GeneralWeierstrass& general_curve() const { return *general_; }
    const ValuedFieldContext& context() const;

    const std::vector<PairRelation<ValuedElement>>& relations() const { return rel_; }
    const std::vector<PairRelation<FieldElem>>& residue_relations() const {
        return res_rel_;
    }
    CoefficientField residue_field() const { return context().residue_field(); }

    GammaValue monomial_weight(const Monomial& m) const;

    CanonicalPoly zero() const { return CanonicalPoly(arity()); }
    CanonicalPoly one() const;
    CanonicalPoly x_var(std::size_t i) const;
    CanonicalPoly y_var(std::size_t i) const;
    CanonicalPoly constant(const ValuedElement& c) const;

    CanonicalPoly mul(const CanonicalPoly& a, const CanonicalPoly& b) const {
        return CanonicalPoly::mul(a, b, rel_);
    }
    CanonicalPoly pow(const CanonicalPoly& a, unsigned e) const {
        return CanonicalPoly::pow(a, e, rel_, context().one());
    }

private:
    std::optional<ShortWeierstrass> short_;
    std::optional<GeneralWeierstrass> general_;
    std::vector<GammaValue> gammas_;
    std::vector<PairRelation<ValuedElement>> rel_;
    std::vector<PairRelation<FieldElem>> res_rel_;
};

// One raw term of an unreduced polynomial over the profile's variables.
struct RawTerm {
    std::vector<unsigned> xe;
    std::vector<unsigned> ye;  // arbitrary y-exponents
    ValuedElement coeff;
};

// Reduction to the canonical a(x) + b(x)y form through the curve relations.
CanonicalPoly normalize(const std::vector<RawTerm>& raw, const GenericProfile& profile);

// Weighted Gauss valuation: min over terms of
// val(coeff) + sum_i e_i gamma_i + (3/2) sum_i f_i gamma_i.
GammaValue gauss_val(const CanonicalPoly& g, const GenericProfile& profile);

GammaValue rat_val(const RatExpr& r, const GenericProfile& profile);

// Termwise residue onto the residue-curve ring of the gamma-scaled curves;
// requires gauss_val(g) >= delta (delta = 0 for the plain residue).
ResidueCurvePoly residue_at(const CanonicalPoly& g, const GenericProfile& profile);
ResidueCurvePoly residue_shifted(const CanonicalPoly& g, const GenericProfile& profile,
                                 const GammaValue& delta);

struct ComposeMode {
    enum Kind { Add, AddInv, Translate } kind;
    std::size_t i = 0;
    std::size_t j = 1;
    CurvePoint g;

    static ComposeMode add(std::size_t i, std::size_t j) { return {Add, i, j, {}}; }
    static ComposeMode add_inv(std::size_t i, std::size_t j) { return {AddInv, i, j, {}}; }
    static ComposeMode translate(CurvePoint p, std::size_t i = 0) {
        return {Translate, i, 0, std::move(p)};
    }
};

// Precomputed group-law images for composing many polynomials in one pair
// against the same (profile, mode). After reserve(), apply() is safe to
// call from several threads.
class GroupLawImages {
public:
    GroupLawImages(GenericProfile profile, const ComposeMode& mode);

    // Precompute power tables for polynomials of x-degree up to max_xdeg.
    void reserve(unsigned max_xdeg);

    RatExpr apply(const CanonicalPoly& f_one_pair) const;

private:
    GenericProfile profile_;
    bool identity_ = false;  // translation by the identity point
    CanonicalPoly nx_, ny_, d_;
    std::vector<CanonicalPoly> pow_nx_, pow_d_;
    CanonicalPoly nx_pow(unsigned e) const;
    CanonicalPoly d_pow(unsigned e) const;
};

// f must live in one pair; the result is a rational expression in the
// profile's variables with denominator a power of the coordinate difference.
RatExpr compose_group_law(const CanonicalPoly& f_one_pair, const ComposeMode& mode,
                          const GenericProfile& profile);

// True when r has valuation exactly gamma and the residue of r/pi^gamma is
// transcendental over the base residue field.
bool is_ball_generic(const RatExpr& r, const GammaValue& gamma,
                     const GenericProfile& profile);

template <class C>
std::string BasisPoly<C>::str(const char* xname, const char* yname) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        std::string mono = m.str(xname, yname);
        if (mono != "1") s += "*" + mono;
    }
    return s;
}

}  // namespace valcurve

#endif
