#include "valcurve/genring.hpp"

#include <sstream>

namespace valcurve {

std::string Monomial::str(const char* xname, const char* yname) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < xe.size(); ++i) {
        if (xe[i]) {
            if (any) os << "*";
            os << xname << (i + 1);
            if (xe[i] > 1) os << "^" << xe[i];
            any = true;
        }
        if (ye[i]) {
            if (any) os << "*";
            os << yname << (i + 1);
            any = true;
        }
    }
    if (!any) os << "1";
    return os.str();
}

namespace {

GammaValue short_gamma_max(const ShortWeierstrass& c) {
    return GammaValue::min(c.A().val().scaled(1, 2), c.B().val().scaled(1, 3));
}

}  // namespace

GenericProfile::GenericProfile(ShortWeierstrass curve, std::vector<GammaValue> gammas)
    : short_(std::move(curve)), gammas_(std::move(gammas)) {
    if (gammas_.empty()) throw Error("profile arity must be positive");
    GammaValue gmax = short_gamma_max(*short_);
    for (const GammaValue& g : gammas_) {
        if (g.is_infinity()) throw Error("profile gamma must be finite");
        if (g > gmax) throw Error("profile gamma exceeds gamma_infinity");
    }
    const ValuedFieldContext& ctx = short_->context();
    PairRelation<ValuedElement> r{ctx.one(), ctx.zero(), short_->A(), short_->B(),
                                  ctx.zero(), ctx.zero()};
    rel_.assign(arity(), r);
    CoefficientField k = ctx.residue_field();
    for (const GammaValue& g : gammas_) {
        res_rel_.push_back(PairRelation<FieldElem>{
            k.one(), k.zero(), short_->A().residue_shift(g.scaled(2)),
            short_->B().residue_shift(g.scaled(3)), k.zero(), k.zero()});
    }
}

GenericProfile::GenericProfile(GeneralWeierstrass curve, std::size_t arity)
    : general_(std::move(curve)), gammas_(arity, GammaValue(0)) {
    if (arity == 0) throw Error("profile arity must be positive");
    PairRelation<ValuedElement> r{general_->context().one(), general_->a2(),
                                  general_->a4(), general_->a6(), -general_->a1(),
                                  -general_->a3()};
    rel_.assign(arity, r);
    CoefficientField k = general_->context().residue_field();
    PairRelation<FieldElem> rr{k.one(),
                               general_->a2().residue(),
                               general_->a4().residue(),
                               general_->a6().residue(),
                               -general_->a1().residue(),
                               -general_->a3().residue()};
    res_rel_.assign(arity, rr);
}

const ValuedFieldContext& GenericProfile::context() const {
    return short_ ? short_->context() : general_->context();
}

GammaValue GenericProfile::monomial_weight(const Monomial& m) const {
    GammaValue w(0);
    for (std::size_t i = 0; i < arity(); ++i) {
        if (m.xe[i]) w = w + gammas_[i].scaled(m.xe[i]);
        if (m.ye[i]) w = w + gammas_[i].scaled(3, 2);
    }
    return w;
}

CanonicalPoly GenericProfile::one() const { return constant(context().one()); }

CanonicalPoly GenericProfile::x_var(std::size_t i) const {
    CanonicalPoly p(arity());
    p.add_term(Monomial::x_var(arity(), i), context().one());
    return p;
}

CanonicalPoly GenericProfile::y_var(std::size_t i) const {
    CanonicalPoly p(arity());
    p.add_term(Monomial::y_var(arity(), i), context().one());
    return p;
}

CanonicalPoly GenericProfile::constant(const ValuedElement& c) const {
    CanonicalPoly p(arity());
    p.add_term(Monomial::unit(arity()), c);
    return p;
}

CanonicalPoly normalize(const std::vector<RawTerm>& raw, const GenericProfile& profile) {
    CanonicalPoly out(profile.arity());
    for (const RawTerm& t : raw) {
        if (t.xe.size() != profile.arity() || t.ye.size() != profile.arity())
            throw Error("raw term arity mismatch");
        out.add_reduced(t.xe, t.ye, t.coeff, profile.relations());
    }
    return out;
}

GammaValue gauss_val(const CanonicalPoly& g, const GenericProfile& profile) {
    GammaValue best = GammaValue::infinity();
    for (const auto& [m, c] : g.terms()) {
        GammaValue w = c.val_checked() + profile.monomial_weight(m);
        best = GammaValue::min(best, w);
    }
    return best;
}

GammaValue rat_val(const RatExpr& r, const GenericProfile& profile) {
    GammaValue dv = gauss_val(r.den, profile);
    if (dv.is_infinity()) throw DivisionByZero("rat_val: zero denominator");
    return gauss_val(r.num, profile) - dv;
}

ResidueCurvePoly residue_shifted(const CanonicalPoly& g, const GenericProfile& profile,
                                 const GammaValue& delta) {
    ResidueCurvePoly out(profile.arity());
    for (const auto& [m, c] : g.terms()) {
        // res of coeff * pi^(weight) / pi^delta
        FieldElem r = c.residue_shift(delta - profile.monomial_weight(m));
        if (!r.is_zero()) out.add_term(m, r);
    }
    return out;
}

ResidueCurvePoly residue_at(const CanonicalPoly& g, const GenericProfile& profile) {
    return residue_shifted(g, profile, GammaValue(0));
}

GroupLawImages::GroupLawImages(GenericProfile profile, const ComposeMode& mode)
    : profile_(std::move(profile)), nx_(profile_.arity()), ny_(profile_.arity()),
      d_(profile_.arity()) {
    const GenericProfile& prof = profile_;
    const std::size_t n = prof.arity();
    const ValuedFieldContext& ctx = prof.context();
    if (mode.i >= n) throw Error("compose: pair index out of range");

    CanonicalPoly x1 = prof.x_var(mode.i);
    CanonicalPoly y1 = prof.y_var(mode.i);
    CanonicalPoly x2(n), y2(n);

    switch (mode.kind) {
        case ComposeMode::Translate: {
            if (mode.g.is_infinity()) {
                identity_ = true;
                return;
            }
            bool on = prof.is_short() ? prof.short_curve().is_on_curve(mode.g)
                                      : prof.general_curve().is_on_curve(mode.g);
            if (!on) throw NotOnCurve("translation point is not on the curve");
            x2 = prof.constant(mode.g.x());
            y2 = prof.constant(mode.g.y());
            break;
        }
        case ComposeMode::Add:
        case ComposeMode::AddInv: {
            if (mode.j >= n || mode.i == mode.j)
                throw Error("compose: invalid pair indices");
            x2 = prof.x_var(mode.j);
            y2 = prof.y_var(mode.j);
            if (mode.kind == ComposeMode::AddInv) {
                if (prof.is_short()) {
                    y2 = -y2;
                } else {
                    const GeneralWeierstrass& c = prof.general_curve();
                    y2 = -y2 - prof.mul(prof.constant(c.a1()), x2) -
                         prof.constant(c.a3());
                }
            }
            break;
        }
    }

    CanonicalPoly a1p = prof.constant(prof.is_short() ? ctx.zero()
                                                      : prof.general_curve().a1());
    CanonicalPoly a2p = prof.constant(prof.is_short() ? ctx.zero()
                                                      : prof.general_curve().a2());
    CanonicalPoly a3p = prof.constant(prof.is_short() ? ctx.zero()
                                                      : prof.general_curve().a3());

    d_ = x2 - x1;
    CanonicalPoly lnum = y2 - y1;
    CanonicalPoly d2 = prof.mul(d_, d_);
    // x3 = lambda^2 + a1 lambda - a2 - x1 - x2 over (x2-x1)^2
    nx_ = prof.mul(lnum, lnum) + prof.mul(prof.mul(a1p, lnum), d_) -
          prof.mul(a2p + x1 + x2, d2);
    // nu = (y1 x2 - y2 x1)/(x2-x1); y3 = -(lambda+a1) x3 - nu - a3 over (x2-x1)^3
    CanonicalPoly nnu = prof.mul(y1, x2) - prof.mul(y2, x1);
    ny_ = -prof.mul(lnum + prof.mul(a1p, d_), nx_) - prof.mul(nnu, d2) -
          prof.mul(a3p, prof.mul(d2, d_));
    pow_nx_.push_back(prof.one());
    pow_d_.push_back(prof.one());
}

void GroupLawImages::reserve(unsigned max_xdeg) {
    if (identity_) return;
    while (pow_nx_.size() <= max_xdeg)
        pow_nx_.push_back(profile_.mul(pow_nx_.back(), nx_));
    // largest denominator exponent: 2*max_xdeg, or 3 for a pure y term
    unsigned dmax = std::max(2 * max_xdeg, 3u);
    while (pow_d_.size() <= dmax) pow_d_.push_back(profile_.mul(pow_d_.back(), d_));
}

CanonicalPoly GroupLawImages::nx_pow(unsigned e) const {
    if (e < pow_nx_.size()) return pow_nx_[e];
    CanonicalPoly r = pow_nx_.back();
    for (std::size_t k = pow_nx_.size(); k <= e; ++k) r = profile_.mul(r, nx_);
    return r;
}

CanonicalPoly GroupLawImages::d_pow(unsigned e) const {
    if (e < pow_d_.size()) return pow_d_[e];
    CanonicalPoly r = pow_d_.back();
    for (std::size_t k = pow_d_.size(); k <= e; ++k) r = profile_.mul(r, d_);
    return r;
}

RatExpr GroupLawImages::apply(const CanonicalPoly& f) const {
    if (f.arity() != 1) throw Error("compose: polynomial must live in one pair");
    const std::size_t n = profile_.arity();
    if (identity_) {
        // translation by the identity leaves f unchanged (re-indexed into
        // the profile's variables)
        CanonicalPoly num(n);
        for (const auto& [m, c] : f.terms()) {
            Monomial mm = Monomial::unit(n);
            mm.xe[0] = m.xe[0];
            mm.ye[0] = m.ye[0];
            num.add_term(mm, c);
        }
        return RatExpr(std::move(num), profile_.one());
    }
    unsigned M = 0;
    for (const auto& [m, c] : f.terms())
        M = std::max(M, 2 * m.xe[0] + 3 * static_cast<unsigned>(m.ye[0]));
    CanonicalPoly num(n);
    for (const auto& [m, c] : f.terms()) {
        unsigned a = m.xe[0];
        unsigned b = m.ye[0];
        CanonicalPoly img = nx_pow(a);
        if (b) img = profile_.mul(img, ny_);
        img = profile_.mul(img, d_pow(M - 2 * a - 3 * b));
        num = num + img.scaled(c);
    }
    return RatExpr(std::move(num), d_pow(M));
}

RatExpr compose_group_law(const CanonicalPoly& f, const ComposeMode& mode,
                          const GenericProfile& profile) {
    return GroupLawImages(profile, mode).apply(f);
}

bool is_ball_generic(const RatExpr& r, const GammaValue& gamma,
                     const GenericProfile& profile) {
    GammaValue dv = gauss_val(r.den, profile);
    if (dv.is_infinity()) throw DivisionByZero("is_ball_generic: zero denominator");
    GammaValue nv = gauss_val(r.num, profile);
    if (nv.is_infinity() || nv - dv != gamma) return false;
    // leading forms at the respective valuations; nonzero by construction
    ResidueCurvePoly ln = residue_shifted(r.num, profile, nv);
    ResidueCurvePoly ld = residue_shifted(r.den, profile, dv);
    // constant residues are exactly the scalar multiples of ld
    const auto& [m0, c0] = *ld.terms().begin();
    auto it = ln.terms().find(m0);
    if (it == ln.terms().end()) return true;
    FieldElem c = it->second / c0;
    return ln != ld.scaled(c);
}

}  // namespace valcurve
