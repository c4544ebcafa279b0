#include "valcurve/element.hpp"

#include <algorithm>
#include <sstream>

namespace valcurve {

namespace {

long padic_val_z(const mpz_class& z, unsigned long p) {
    if (z == 0) throw Error("padic_val_z of zero");
    mpz_class rem, pz(p);
    return static_cast<long>(mpz_remove(rem.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

long padic_val_q(const mpq_class& q, unsigned long p) {
    return padic_val_z(q.get_num(), p) - padic_val_z(q.get_den(), p);
}

mpq_class pow_q(const mpq_class& b, long e) {
    mpq_class r(1), base = b;
    bool invert = e < 0;
    unsigned long n = invert ? -static_cast<unsigned long>(e) : e;
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    if (invert) r = 1 / r;
    return r;
}

void require_same_ctx(const ValuedElement& a, const ValuedElement& b) {
    if (a.context() != b.context()) throw Error("valued-field context mismatch");
}

long add_prec(long a, long b) {
    if (a == ValuedElement::kExact || b == ValuedElement::kExact)
        return ValuedElement::kExact;
    return a + b;
}

}  // namespace

// ---- ValuedFieldContext ----

ValuedFieldContext ValuedFieldContext::padic(unsigned long p) {
    mpz_class z(p);
    if (mpz_probab_prime_p(z.get_mpz_t(), 32) == 0)
        throw Error("p-adic backend requires a prime");
    detail::ContextDesc d;
    d.backend = Backend::PadicRationals;
    d.p = p;
    d.k = CoefficientField::prime_field(p);
    return ValuedFieldContext(std::move(d));
}

ValuedFieldContext ValuedFieldContext::laurent(CoefficientField k, long prec_steps) {
    if (prec_steps <= 0) throw Error("precision budget must be positive");
    detail::ContextDesc d;
    d.backend = Backend::Laurent;
    d.k = std::move(k);
    d.prec_steps = prec_steps;
    return ValuedFieldContext(std::move(d));
}

ValuedFieldContext ValuedFieldContext::ramified(long M) const {
    if (M < 1) throw Error("ramification index must be positive");
    if (M == 1) return *this;
    if (d_->backend == Backend::PadicRationals)
        throw UnsupportedRamification(
            "p-adic rational backend carries only integer valuations");
    detail::ContextDesc d = *d_;
    d.ram *= M;
    d.prec_steps *= M;  // same gamma-level budget in the finer lattice
    return ValuedFieldContext(std::move(d));
}

CoefficientField ValuedFieldContext::residue_field() const { return d_->k; }

unsigned long ValuedFieldContext::residue_characteristic() const {
    return d_->backend == Backend::PadicRationals ? d_->p : d_->k.characteristic();
}

bool ValuedFieldContext::operator==(const ValuedFieldContext& o) const {
    if (d_ == o.d_) return true;
    if (!d_ || !o.d_) return false;
    return *d_ == *o.d_;
}

ValuedElement ValuedFieldContext::zero() const { return from_rational(mpq_class(0)); }
ValuedElement ValuedFieldContext::one() const { return from_rational(mpq_class(1)); }
ValuedElement ValuedFieldContext::from_integer(long v) const {
    return from_rational(mpq_class(v));
}

ValuedElement ValuedFieldContext::from_rational(const mpq_class& v) const {
    ValuedElement e;
    e.ctx_ = *this;
    if (d_->backend == Backend::PadicRationals) {
        e.rat_ = v;
        e.rat_.canonicalize();
        return e;
    }
    return from_coefficient(d_->k.from_rational(v));
}

ValuedElement ValuedFieldContext::from_coefficient(const FieldElem& c) const {
    if (d_->backend == Backend::PadicRationals) {
        throw Error("p-adic backend has no coefficient embedding; use from_rational");
    }
    if (c.field() != d_->k) throw Error("coefficient from a different field");
    ValuedElement e;
    e.ctx_ = *this;
    if (!c.is_zero()) e.ts_.emplace(0, c);
    return e;
}

ValuedElement ValuedFieldContext::uniformizer_pow(long steps) const {
    if (d_->backend == Backend::PadicRationals)
        return from_rational(pow_q(mpq_class(d_->p), steps));
    return monomial(steps, d_->k.one());
}

ValuedElement ValuedFieldContext::monomial(long steps, const FieldElem& c) const {
    if (d_->backend == Backend::PadicRationals)
        throw Error("monomial construction is a Laurent-backend operation");
    if (c.field() != d_->k) throw Error("coefficient from a different field");
    ValuedElement e;
    e.ctx_ = *this;
    if (!c.is_zero()) e.ts_.emplace(steps, c);
    return e;
}

std::string ValuedFieldContext::str() const {
    std::ostringstream os;
    if (d_->backend == Backend::PadicRationals) {
        os << "padic(" << d_->p << ")";
    } else {
        os << "laurent(" << d_->k.str() << ",prec=" << d_->prec_steps << ")";
    }
    if (d_->ram != 1) os << "/N=" << d_->ram;
    return os.str();
}

// ---- ValuedElement ----

void ValuedElement::trim() {
    if (prec_ == kExact) return;
    for (auto it = ts_.begin(); it != ts_.end();) {
        if (it->first >= prec_)
            it = ts_.erase(it);
        else
            ++it;
    }
}

long ValuedElement::val_floor_steps() const {
    if (!ts_.empty()) return ts_.begin()->first;
    return prec_;  // kExact for exact zero
}

GammaValue ValuedElement::val() const {
    if (!laurent()) {
        if (rat_ == 0) return GammaValue::infinity();
        return GammaValue(padic_val_q(rat_, ctx_.prime()), 1);
    }
    if (ts_.empty()) return GammaValue::infinity();
    return GammaValue(ts_.begin()->first, ctx_.ramification());
}

GammaValue ValuedElement::val_checked() const {
    if (laurent() && ts_.empty() && prec_ != kExact)
        throw PrecisionExhausted(
            "element indistinguishable from zero; valuation not certifiable");
    return val();
}

bool ValuedElement::is_exact() const { return !laurent() || prec_ == kExact; }
bool ValuedElement::is_exact_zero() const {
    if (!laurent()) return rat_ == 0;
    return ts_.empty() && prec_ == kExact;
}
bool ValuedElement::is_zero() const {
    if (!laurent()) return rat_ == 0;
    return ts_.empty();
}

ValuedElement ValuedElement::operator-() const {
    ValuedElement r = *this;
    if (!laurent()) {
        r.rat_ = -r.rat_;
        return r;
    }
    for (auto& [s, c] : r.ts_) c = -c;
    return r;
}

ValuedElement operator+(const ValuedElement& a, const ValuedElement& b) {
    require_same_ctx(a, b);
    ValuedElement r;
    r.ctx_ = a.ctx_;
    if (!a.laurent()) {
        r.rat_ = a.rat_ + b.rat_;
        r.rat_.canonicalize();
        return r;
    }
    r.ts_ = a.ts_;
    for (const auto& [s, c] : b.ts_) {
        auto [it, fresh] = r.ts_.emplace(s, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) r.ts_.erase(it);
        }
    }
    r.prec_ = std::min(a.prec_, b.prec_);
    r.trim();
    return r;
}

ValuedElement operator-(const ValuedElement& a, const ValuedElement& b) { return a + (-b); }

ValuedElement operator*(const ValuedElement& a, const ValuedElement& b) {
    require_same_ctx(a, b);
    ValuedElement r;
    r.ctx_ = a.ctx_;
    if (!a.laurent()) {
        r.rat_ = a.rat_ * b.rat_;
        r.rat_.canonicalize();
        return r;
    }
    r.prec_ = std::min(add_prec(a.prec_, b.val_floor_steps()),
                       add_prec(b.prec_, a.val_floor_steps()));
    for (const auto& [sa, ca] : a.ts_)
        for (const auto& [sb, cb] : b.ts_) {
            long s = sa + sb;
            if (r.prec_ != ValuedElement::kExact && s >= r.prec_) continue;
            FieldElem c = ca * cb;
            if (c.is_zero()) continue;
            auto [it, fresh] = r.ts_.emplace(s, c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second.is_zero()) r.ts_.erase(it);
            }
        }
    return r;
}

ValuedElement operator/(const ValuedElement& a, const ValuedElement& b) {
    return a * b.inverse();
}

ValuedElement ValuedElement::shifted(long steps) const {
    ValuedElement r;
    r.ctx_ = ctx_;
    for (const auto& [s, c] : ts_) r.ts_.emplace(s + steps, c);
    r.prec_ = prec_ == kExact ? kExact : prec_ + steps;
    return r;
}

// Newton inversion of a unit series (val 0) to the given relative precision.
ValuedElement laurent_unit_inverse(const ValuedElement& u, long rel_prec) {
    const FieldElem& c0 = u.ts_.begin()->second;
    ValuedElement y = u.context().from_coefficient(c0.inverse());
    ValuedElement two = u.context().from_integer(2);
    // clamp the working precision so intermediate products stay truncated
    ValuedElement uc = u;
    uc.prec_ = std::min(uc.prec_, rel_prec);
    uc.trim();
    long correct = 1;
    while (correct < rel_prec) {
        y = y * (two - uc * y);
        y.prec_ = rel_prec;
        y.trim();
        correct *= 2;
    }
    y.prec_ = rel_prec;
    y.trim();
    return y;
}

ValuedElement ValuedElement::inverse() const {
    if (!laurent()) {
        if (rat_ == 0) throw DivisionByZero("inverse of zero");
        ValuedElement r;
        r.ctx_ = ctx_;
        r.rat_ = 1 / rat_;
        return r;
    }
    if (ts_.empty()) {
        if (prec_ == kExact) throw DivisionByZero("inverse of zero");
        throw PrecisionExhausted("division by element indistinguishable from zero");
    }
    long v = ts_.begin()->first;
    if (ts_.size() == 1 && prec_ == kExact) {
        // exact monomial: exact inverse
        ValuedElement r;
        r.ctx_ = ctx_;
        r.ts_.emplace(-v, ts_.begin()->second.inverse());
        return r;
    }
    long rel = prec_ == kExact ? ctx_.precision_steps() : prec_ - v;
    ValuedElement y = laurent_unit_inverse(shifted(-v), rel);
    return y.shifted(-v);
}

ValuedElement ValuedElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ValuedElement r = ctx_.one();
    ValuedElement base = *this;
    unsigned long n = e;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool ValuedElement::operator==(const ValuedElement& o) const {
    require_same_ctx(*this, o);
    if (!laurent()) return rat_ == o.rat_;
    return (*this - o).ts_.empty();
}

FieldElem ValuedElement::residue() const { return residue_shift(GammaValue(0)); }

FieldElem ValuedElement::residue_shift(const GammaValue& delta) const {
    const CoefficientField k = ctx_.residue_field();
    if (!laurent()) {
        if (rat_ == 0) return k.zero();
        long v = padic_val_q(rat_, ctx_.prime());
        GammaValue gv(v, 1);
        if (gv < delta) throw NotIntegral("negative valuation after shift");
        if (gv > delta) return k.zero();
        // delta == v, an integer
        mpq_class unit = rat_ * pow_q(mpq_class(ctx_.prime()), -v);
        return k.from_rational(unit);
    }
    if (ts_.empty()) {
        if (prec_ == kExact) return k.zero();
        GammaValue pgamma(prec_, ctx_.ramification());
        if (pgamma > delta) return k.zero();
        throw PrecisionExhausted("residue not certifiable at this precision");
    }
    if (val() < delta) throw NotIntegral("negative valuation after shift");
    long N = ctx_.ramification();
    if (!delta.is_integral_times(N)) return k.zero();  // no term off the lattice
    long s = delta.integer_times(N);
    if (prec_ != kExact && s >= prec_)
        throw PrecisionExhausted("residue not certifiable at this precision");
    auto it = ts_.find(s);
    return it == ts_.end() ? k.zero() : it->second;
}

ValuedElement ValuedElement::hensel_sqrt() const {
    if (ctx_.residue_characteristic() == 2)
        throw Error("hensel_sqrt requires residue characteristic != 2");
    if (!laurent()) {
        if (rat_ == 0) return ctx_.zero();
        long v = padic_val_q(rat_, ctx_.prime());
        if (v % 2 != 0) throw OddValuation("valuation is odd");
        mpq_class unit = rat_ * pow_q(mpq_class(ctx_.prime()), -v);
        FieldElem r0 = ctx_.residue_field().from_rational(unit);
        auto s0 = r0.sqrt();
        if (!s0) throw NotASquare("residue is not a square");
        auto root = [&]() -> mpq_class {
            mpz_class num = rat_.get_num(), den = rat_.get_den();
            if (rat_ < 0 || !mpz_perfect_square_p(num.get_mpz_t()) ||
                !mpz_perfect_square_p(den.get_mpz_t()))
                throw NotRepresentable("square root is not rational");
            mpz_class rn, rd;
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            return mpq_class(rn, rd);
        }();
        // pick the branch whose residue is the canonical square root
        mpq_class unit_root = root * pow_q(mpq_class(ctx_.prime()), -v / 2);
        if (!(ctx_.residue_field().from_rational(unit_root) == *s0)) root = -root;
        ValuedElement r;
        r.ctx_ = ctx_;
        r.rat_ = root;
        return r;
    }
    if (ts_.empty()) {
        if (prec_ == kExact) return ctx_.zero();
        throw PrecisionExhausted("square root of element indistinguishable from zero");
    }
    long v = ts_.begin()->first;
    if (v % 2 != 0) throw OddValuation("valuation is odd in the value lattice");
    ValuedElement u = shifted(-v);
    auto s0 = u.ts_.begin()->second.sqrt();
    if (!s0) throw NotASquare("leading coefficient is not a square");
    long rel = prec_ == kExact ? ctx_.precision_steps() : prec_ - v;
    u.prec_ = std::min(u.prec_, rel);
    u.trim();
    ValuedElement y = ctx_.from_coefficient(*s0);
    ValuedElement half = ctx_.one() / ctx_.from_integer(2);
    long correct = 1;
    while (correct < rel) {
        y = (y + u * y.inverse()) * half;
        y.prec_ = rel;
        y.trim();
        correct *= 2;
    }
    y.prec_ = rel;
    y.trim();
    return y.shifted(v / 2);
}

ValuedElement ValuedElement::embed(const ValuedFieldContext& finer) const {
    if (finer == ctx_) return *this;
    if (!laurent() || finer.backend() != Backend::Laurent ||
        finer.coefficient_field() != ctx_.coefficient_field())
        throw Error("embed: incompatible contexts");
    if (finer.ramification() % ctx_.ramification() != 0)
        throw Error("embed: target lattice does not refine the source");
    long M = finer.ramification() / ctx_.ramification();
    ValuedElement r;
    r.ctx_ = finer;
    for (const auto& [s, c] : ts_) r.ts_.emplace(s * M, c);
    r.prec_ = prec_ == kExact ? kExact : prec_ * M;
    return r;
}

const mpq_class& ValuedElement::rational_value() const {
    if (laurent()) throw Error("rational_value is a p-adic accessor");
    return rat_;
}

std::string ValuedElement::str() const {
    if (!laurent()) return rat_.get_str();
    std::ostringstream os;
    long N = ctx_.ramification();
    auto expstr = [N](long s) {
        if (s % N == 0) return std::to_string(s / N);
        return "(" + std::to_string(s) + "/" + std::to_string(N) + ")";
    };
    bool first = true;
    for (const auto& [s, c] : ts_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (!first) os << (neg ? "-" : "+");
        else if (neg) os << "-";
        first = false;
        if (neg) cs = cs.substr(1);
        bool unit_coeff = cs == "1";
        bool composite = cs.find('+') != std::string::npos ||
                         cs.find('-') != std::string::npos ||
                         cs.find('*') != std::string::npos ||
                         cs.find('/') != std::string::npos;
        if (s == 0) {
            os << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (!unit_coeff) os << (composite ? "(" + cs + ")" : cs) << "*";
        os << "t";
        if (s != N) os << "^" << expstr(s);
    }
    if (first) os << "0";
    if (prec_ != kExact) os << "+O(t^" << expstr(prec_) << ")";
    return os.str();
}

}  // namespace valcurve
