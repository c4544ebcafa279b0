#include "valcurve/coeff_field.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace valcurve {
namespace detail {
namespace {

// ---- scalar arithmetic over the base (Q or F_p) ----

mpq_class snorm(const FieldDesc& k, mpq_class v) {
    if (k.base == FieldBase::PrimeField) {
        // canonical representative in [0, p); inputs always have denominator
        // coprime to p
        mpz_class p(k.p);
        mpz_class num = v.get_num(), den = v.get_den();
        if (den != 1) {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw DivisionByZero("denominator not invertible mod p");
            num *= inv;
        }
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        return mpq_class(r);
    }
    v.canonicalize();
    return v;
}

mpq_class sadd(const FieldDesc& k, const mpq_class& a, const mpq_class& b) {
    return snorm(k, a + b);
}
mpq_class ssub(const FieldDesc& k, const mpq_class& a, const mpq_class& b) {
    return snorm(k, a - b);
}
mpq_class smul(const FieldDesc& k, const mpq_class& a, const mpq_class& b) {
    return snorm(k, a * b);
}
mpq_class sneg(const FieldDesc& k, const mpq_class& a) { return snorm(k, -a); }

mpq_class sinv(const FieldDesc& k, const mpq_class& a) {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (k.base == FieldBase::PrimeField) {
        mpz_class p(k.p), inv;
        mpz_class num = a.get_num();
        if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
            throw DivisionByZero("not invertible mod p");
        return mpq_class(inv);
    }
    return mpq_class(1) / a;
}

mpq_class sdiv(const FieldDesc& k, const mpq_class& a, const mpq_class& b) {
    return smul(k, a, sinv(k, b));
}

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
    if (v < 0) return std::nullopt;
    mpz_class num = v.get_num(), den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

// Tonelli-Shanks; canonical branch is the least representative.
std::optional<mpq_class> prime_field_sqrt(unsigned long p, const mpq_class& v) {
    mpz_class a = v.get_num();
    mpz_class mp(p);
    if (a == 0) return mpq_class(0);
    if (p == 2) return v;  // every element is a square in F_2
    mpz_class leg;
    mpz_class e = (mp - 1) / 2;
    mpz_powm(leg.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), mp.get_mpz_t());
    if (leg != 1) return std::nullopt;

    // factor p-1 = q * 2^s with q odd
    mpz_class q = mp - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    // find a non-residue z
    mpz_class z = 2;
    while (true) {
        mpz_class t;
        mpz_powm(t.get_mpz_t(), z.get_mpz_t(), e.get_mpz_t(), mp.get_mpz_t());
        if (t == mp - 1) break;
        ++z;
    }
    mpz_class m(s), c, t, r, tmp;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), mp.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), mp.get_mpz_t());
    tmp = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), tmp.get_mpz_t(), mp.get_mpz_t());
    while (t != 1) {
        mpz_class tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            mpz_powm_ui(tt.get_mpz_t(), tt.get_mpz_t(), 2, mp.get_mpz_t());
            ++i;
        }
        mpz_class b = c;
        for (unsigned long j = 0; j + i + 1 < mpz_get_ui(m.get_mpz_t()); ++j)
            mpz_powm_ui(b.get_mpz_t(), b.get_mpz_t(), 2, mp.get_mpz_t());
        m = mpz_class(i);
        mpz_powm_ui(c.get_mpz_t(), b.get_mpz_t(), 2, mp.get_mpz_t());
        t = t * c % mp;
        r = r * b % mp;
    }
    mpz_class other = mp - r;
    if (other < r) r = other;
    return mpq_class(r);
}

// ---- polynomial layer ----

int cmp_gradedlex(const Expo& a, const Expo& b) {
    unsigned long da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

// graded-lex maximal term
std::map<Expo, mpq_class>::const_iterator lead(const MPoly& f) {
    auto best = f.t.begin();
    for (auto it = std::next(f.t.begin()); it != f.t.end(); ++it)
        if (cmp_gradedlex(it->first, best->first) > 0) best = it;
    return best;
}

void add_term(const FieldDesc& k, MPoly& f, const Expo& e, const mpq_class& c) {
    auto [it, fresh] = f.t.emplace(e, c);
    if (!fresh) {
        it->second = sadd(k, it->second, c);
        if (it->second == 0) f.t.erase(it);
    } else if (it->second == 0) {
        f.t.erase(it);
    }
}

MPoly pneg(const FieldDesc& k, const MPoly& f) {
    MPoly r;
    for (const auto& [e, c] : f.t) r.t.emplace(e, sneg(k, c));
    return r;
}

MPoly pscale(const FieldDesc& k, const MPoly& f, const mpq_class& s) {
    MPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : f.t) {
        mpq_class v = smul(k, c, s);
        if (v != 0) r.t.emplace(e, v);
    }
    return r;
}

unsigned deg_in(const MPoly& f, std::size_t v) {
    unsigned d = 0;
    for (const auto& [e, c] : f.t)
        if (v < e.size()) d = std::max(d, e[v]);
    return d;
}

MPoly pone(std::size_t nv) {
    MPoly r;
    r.t.emplace(Expo(nv, 0), mpq_class(1));
    return r;
}

}  // namespace

MPoly mpoly_add(const FieldDesc& k, const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.t) add_term(k, r, e, c);
    return r;
}

MPoly mpoly_mul(const FieldDesc& k, const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            Expo e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            add_term(k, r, e, smul(k, ca, cb));
        }
    return r;
}

// exact long division in graded-lex order; throws when not exact
MPoly mpoly_div_exact(const FieldDesc& k, const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    MPoly q, r = a;
    auto lb = lead(b);
    while (!r.is_zero()) {
        auto lr = lead(r);
        Expo e = lr->first;
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < lb->first[i]) {
                ok = false;
                break;
            }
            e[i] -= lb->first[i];
        }
        if (!ok) throw Error("mpoly_div_exact: division not exact");
        mpq_class c = sdiv(k, lr->second, lb->second);
        q.t.emplace(e, c);
        // r -= c * x^e * b
        for (const auto& [eb, cb] : b.t) {
            Expo ee = e;
            for (std::size_t i = 0; i < ee.size(); ++i) ee[i] += eb[i];
            add_term(k, r, ee, sneg(k, smul(k, c, cb)));
        }
    }
    return q;
}

namespace {

// coefficients of f seen as univariate in variable v (entries may be zero)
std::vector<MPoly> univariate_in(const MPoly& f, std::size_t v) {
    std::vector<MPoly> out(deg_in(f, v) + 1);
    for (const auto& [e, c] : f.t) {
        Expo rest = e;
        unsigned d = rest[v];
        rest[v] = 0;
        out[d].t.emplace(rest, c);
    }
    return out;
}

MPoly from_univariate(const std::vector<MPoly>& cs, std::size_t v) {
    MPoly r;
    for (std::size_t d = 0; d < cs.size(); ++d)
        for (const auto& [e, c] : cs[d].t) {
            Expo ee = e;
            ee[v] = static_cast<unsigned>(d);
            r.t.emplace(ee, c);
        }
    return r;
}

MPoly make_monic(const FieldDesc& k, const MPoly& f) {
    if (f.is_zero()) return f;
    return pscale(k, f, sinv(k, lead(f)->second));
}

MPoly content(const FieldDesc& k, const MPoly& f, std::size_t v) {
    MPoly c;
    for (const auto& part : univariate_in(f, v))
        if (!part.is_zero()) c = mpoly_gcd(k, c, part);
    return c;
}

// pseudo-remainder of a by b with respect to variable v
MPoly prem(const FieldDesc& k, MPoly a, const MPoly& b, std::size_t v) {
    unsigned db = deg_in(b, v);
    auto bu = univariate_in(b, v);
    const MPoly& lcb = bu[db];
    while (!a.is_zero()) {
        unsigned da = deg_in(a, v);
        if (da < db) break;
        auto au = univariate_in(a, v);
        const MPoly lca = au[da];
        // a = lcb*a - lca * x^(da-db) * b
        MPoly t1 = mpoly_mul(k, a, lcb);
        MPoly shift;
        Expo se(b.t.begin()->first.size(), 0);
        se[v] = da - db;
        shift.t.emplace(se, mpq_class(1));
        MPoly t2 = mpoly_mul(k, mpoly_mul(k, lca, shift), b);
        a = mpoly_add(k, t1, pneg(k, t2));
    }
    return a;
}

}  // namespace

// primitive-PRS multivariate gcd, normalized monic in graded-lex
MPoly mpoly_gcd(const FieldDesc& k, const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return make_monic(k, b);
    if (b.is_zero()) return make_monic(k, a);
    std::size_t nv = a.t.begin()->first.size();
    // main variable: first with positive degree in either operand
    std::size_t v = nv;
    for (std::size_t i = 0; i < nv; ++i)
        if (deg_in(a, i) > 0 || deg_in(b, i) > 0) {
            v = i;
            break;
        }
    if (v == nv) return pone(nv);  // both constants

    MPoly ca = content(k, a, v), cb = content(k, b, v);
    MPoly f = mpoly_div_exact(k, a, ca);
    MPoly g = mpoly_div_exact(k, b, cb);
    if (deg_in(f, v) < deg_in(g, v)) std::swap(f, g);
    while (!g.is_zero()) {
        MPoly r = prem(k, f, g, v);
        f = g;
        if (r.is_zero()) {
            g = MPoly{};
        } else {
            g = mpoly_div_exact(k, r, content(k, r, v));
        }
    }
    MPoly cg = mpoly_gcd(k, ca, cb);
    return make_monic(k, mpoly_mul(k, cg, f));
}

namespace {

MPolyFrac frac_normalize(const FieldDesc& k, MPoly num, MPoly den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator in function field");
    if (num.is_zero()) return MPolyFrac{MPoly{}, pone(den.t.begin()->first.size())};
    MPoly g = mpoly_gcd(k, num, den);
    num = mpoly_div_exact(k, num, g);
    den = mpoly_div_exact(k, den, g);
    mpq_class lc = lead(den)->second;
    if (lc != 1) {
        mpq_class inv = sinv(k, lc);
        num = pscale(k, num, inv);
        den = pscale(k, den, inv);
    }
    return MPolyFrac{std::move(num), std::move(den)};
}

// greedy graded-lex square root of a polynomial; nullopt when not a square
std::optional<MPoly> poly_sqrt(const FieldDesc& k, const MPoly& f,
                               unsigned long p_for_scalar_sqrt) {
    if (f.is_zero()) return MPoly{};
    auto lf = lead(f);
    Expo se = lf->first;
    for (auto& e : se) {
        if (e % 2 != 0) return std::nullopt;
        e /= 2;
    }
    std::optional<mpq_class> sc;
    if (k.base == FieldBase::PrimeField)
        sc = prime_field_sqrt(p_for_scalar_sqrt, lf->second);
    else
        sc = rational_sqrt(lf->second);
    if (!sc) return std::nullopt;
    MPoly s;
    s.t.emplace(se, *sc);
    mpq_class twice_lc = sadd(k, *sc, *sc);
    if (twice_lc == 0) return std::nullopt;  // char 2 not handled here
    MPoly r = mpoly_add(k, f, pneg(k, mpoly_mul(k, s, s)));
    std::size_t guard = f.t.size() * 4 + 16;
    while (!r.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        auto lr = lead(r);
        Expo e = lr->first;
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < se[i]) {
                ok = false;
                break;
            }
            e[i] -= se[i];
        }
        if (!ok) return std::nullopt;
        MPoly term;
        term.t.emplace(e, sdiv(k, lr->second, twice_lc));
        s = mpoly_add(k, s, term);
        r = mpoly_add(k, f, pneg(k, mpoly_mul(k, s, s)));
    }
    return s;
}

std::string scalar_str(const FieldDesc& k, const mpq_class& c) {
    (void)k;
    return c.get_str();
}

std::string mpoly_str(const FieldDesc& k, const MPoly& f) {
    if (f.is_zero()) return "0";
    // print in descending graded-lex for stability
    std::vector<std::map<Expo, mpq_class>::const_iterator> terms;
    for (auto it = f.t.begin(); it != f.t.end(); ++it) terms.push_back(it);
    std::sort(terms.begin(), terms.end(), [](auto a, auto b) {
        return cmp_gradedlex(a->first, b->first) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (auto it : terms) {
        mpq_class c = it->second;
        bool neg = k.base == FieldBase::Rationals && c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? "-" : "+");
        }
        first = false;
        if (neg) c = -c;
        std::string mono;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            unsigned e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += k.symbols[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            os << scalar_str(k, c);
        } else {
            if (c != 1) os << scalar_str(k, c) << "*";
            os << mono;
        }
    }
    return os.str();
}

}  // namespace
}  // namespace detail

using detail::FieldDesc;
using detail::MPoly;
using detail::MPolyFrac;

CoefficientField CoefficientField::rationals() {
    return CoefficientField(FieldDesc{FieldBase::Rationals, 0, {}});
}

CoefficientField CoefficientField::prime_field(unsigned long p) {
    if (p < 2) throw Error("prime field modulus must be at least 2");
    return CoefficientField(FieldDesc{FieldBase::PrimeField, p, {}});
}

CoefficientField CoefficientField::with_transcendentals(
    const std::vector<std::string>& names) const {
    FieldDesc d = *d_;
    for (const auto& n : names) {
        if (n.empty()) throw Error("empty transcendental name");
        if (std::find(d.symbols.begin(), d.symbols.end(), n) != d.symbols.end())
            throw DuplicateSymbol("symbol already adjoined: " + n);
        d.symbols.push_back(n);
    }
    return CoefficientField(std::move(d));
}

std::optional<std::size_t> CoefficientField::symbol_index(const std::string& name) const {
    for (std::size_t i = 0; i < d_->symbols.size(); ++i)
        if (d_->symbols[i] == name) return i;
    return std::nullopt;
}

bool CoefficientField::operator==(const CoefficientField& o) const {
    if (d_ == o.d_) return true;
    if (!d_ || !o.d_) return false;
    return *d_ == *o.d_;
}

FieldElem CoefficientField::zero() const { return from_rational(mpq_class(0)); }
FieldElem CoefficientField::one() const { return from_rational(mpq_class(1)); }
FieldElem CoefficientField::from_integer(long v) const {
    return from_rational(mpq_class(v));
}

FieldElem CoefficientField::from_rational(const mpq_class& v) const {
    mpq_class s = detail::snorm(*d_, v);
    if (!is_function_field()) return FieldElem(*this, std::move(s));
    MPoly num;
    if (s != 0) num.t.emplace(detail::Expo(d_->symbols.size(), 0), s);
    return FieldElem(*this, MPolyFrac{std::move(num), detail::pone(d_->symbols.size())});
}

FieldElem CoefficientField::symbol(const std::string& name) const {
    auto idx = symbol_index(name);
    if (!idx) throw Error("unknown transcendental: " + name);
    MPoly num;
    detail::Expo e(d_->symbols.size(), 0);
    e[*idx] = 1;
    num.t.emplace(std::move(e), mpq_class(1));
    return FieldElem(*this, MPolyFrac{std::move(num), detail::pone(d_->symbols.size())});
}

std::string CoefficientField::str() const {
    std::string s = d_->base == FieldBase::Rationals ? "Q" : "F" + std::to_string(d_->p);
    if (!d_->symbols.empty()) {
        s += "(";
        for (std::size_t i = 0; i < d_->symbols.size(); ++i) {
            if (i) s += ",";
            s += d_->symbols[i];
        }
        s += ")";
    }
    return s;
}

namespace {

void require_same(const FieldElem& a, const FieldElem& b) {
    if (a.field() != b.field()) throw Error("coefficient field mismatch");
}

}  // namespace

bool FieldElem::is_zero() const {
    if (fr_) return fr_->num.is_zero();
    return q_ == 0;
}

bool FieldElem::is_one() const {
    if (fr_)
        return fr_->den.t.size() == 1 && fr_->num.t.size() == 1 &&
               fr_->num.t == detail::pone(f_.symbols().size()).t;
    return q_ == 1;
}

FieldElem FieldElem::operator-() const {
    if (fr_) {
        return FieldElem(f_, MPolyFrac{detail::pneg(f_.desc(), fr_->num), fr_->den});
    }
    return FieldElem(f_, detail::sneg(f_.desc(), q_));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    const FieldDesc& k = a.f_.desc();
    if (!a.fr_) return FieldElem(a.f_, detail::sadd(k, a.q_, b.q_));
    MPoly num = detail::mpoly_add(k, detail::mpoly_mul(k, a.fr_->num, b.fr_->den),
                                  detail::mpoly_mul(k, b.fr_->num, a.fr_->den));
    MPoly den = detail::mpoly_mul(k, a.fr_->den, b.fr_->den);
    return FieldElem(a.f_, detail::frac_normalize(k, std::move(num), std::move(den)));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    const FieldDesc& k = a.f_.desc();
    if (!a.fr_) return FieldElem(a.f_, detail::smul(k, a.q_, b.q_));
    MPoly num = detail::mpoly_mul(k, a.fr_->num, b.fr_->num);
    MPoly den = detail::mpoly_mul(k, a.fr_->den, b.fr_->den);
    return FieldElem(a.f_, detail::frac_normalize(k, std::move(num), std::move(den)));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::inverse() const {
    const FieldDesc& k = f_.desc();
    if (!fr_) return FieldElem(f_, detail::sinv(k, q_));
    if (fr_->num.is_zero()) throw DivisionByZero("inverse of zero");
    return FieldElem(f_, detail::frac_normalize(k, fr_->den, fr_->num));
}

FieldElem FieldElem::pow(unsigned long e) const {
    FieldElem r = f_.one();
    FieldElem base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (f_ != o.f_) return false;
    if (fr_) return fr_->num.t == o.fr_->num.t && fr_->den.t == o.fr_->den.t;
    return q_ == o.q_;
}

std::optional<FieldElem> FieldElem::sqrt() const {
    const FieldDesc& k = f_.desc();
    if (!fr_) {
        std::optional<mpq_class> r = k.base == FieldBase::PrimeField
                                         ? detail::prime_field_sqrt(k.p, q_)
                                         : detail::rational_sqrt(q_);
        if (!r) return std::nullopt;
        return FieldElem(f_, std::move(*r));
    }
    auto rn = detail::poly_sqrt(k, fr_->num, k.p);
    if (!rn) return std::nullopt;
    auto rd = detail::poly_sqrt(k, fr_->den, k.p);
    if (!rd) return std::nullopt;
    return FieldElem(f_, detail::frac_normalize(k, std::move(*rn), std::move(*rd)));
}

bool FieldElem::is_base_constant() const {
    if (!fr_) return true;
    if (fr_->num.is_zero()) return true;
    auto constant = [](const MPoly& f) {
        return f.t.size() == 1 &&
               std::all_of(f.t.begin()->first.begin(), f.t.begin()->first.end(),
                           [](unsigned e) { return e == 0; });
    };
    return constant(fr_->num) && constant(fr_->den);
}

mpq_class FieldElem::base_value() const {
    if (!fr_) return q_;
    if (fr_->num.is_zero()) return mpq_class(0);
    if (!is_base_constant()) throw Error("element is not a base constant");
    return mpq_class(fr_->num.t.begin()->second / fr_->den.t.begin()->second);
}

std::string FieldElem::str() const {
    const FieldDesc& k = f_.desc();
    if (!fr_) return detail::scalar_str(k, q_);
    std::string n = detail::mpoly_str(k, fr_->num);
    if (fr_->den.t == detail::pone(f_.symbols().size()).t) return n;
    return "(" + n + ")/(" + detail::mpoly_str(k, fr_->den) + ")";
}

}  // namespace valcurve
