#ifndef VALCURVE_GAMMA_HPP
#define VALCURVE_GAMMA_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

#include "valcurve/errors.hpp"

namespace valcurve {

// Element of the value group Q, extended by +infinity (the value of 0).
// Rationals are kept in lowest terms with positive denominator; INFINITY
// absorbs addition and dominates every rational in the order.
class GammaValue {
public:
    GammaValue() : inf_(false), q_(0) {}
    GammaValue(long num, long den = 1) : inf_(false), q_(num, den) {
        if (den == 0) throw DivisionByZero("GammaValue with zero denominator");
        q_.canonicalize();
    }
    explicit GammaValue(const mpq_class& q) : inf_(false), q_(q) { q_.canonicalize(); }

    static GammaValue infinity() {
        GammaValue g;
        g.inf_ = true;
        return g;
    }

    bool is_infinity() const { return inf_; }
    bool is_zero() const { return !inf_ && q_ == 0; }

    const mpq_class& rational() const {
        if (inf_) throw Error("GammaValue: infinity has no rational value");
        return q_;
    }

    friend GammaValue operator+(const GammaValue& a, const GammaValue& b) {
        if (a.inf_ || b.inf_) return infinity();
        return GammaValue(mpq_class(a.q_ + b.q_));
    }
    // a - b with b required finite (b is a denominator valuation in practice).
    friend GammaValue operator-(const GammaValue& a, const GammaValue& b) {
        if (b.inf_) throw Error("GammaValue: cannot subtract infinity");
        if (a.inf_) return infinity();
        return GammaValue(mpq_class(a.q_ - b.q_));
    }
    GammaValue operator-() const {
        if (inf_) throw Error("GammaValue: cannot negate infinity");
        return GammaValue(mpq_class(-q_));
    }

    // value * (num/den); infinity stays infinity (num/den > 0 in all uses).
    GammaValue scaled(long num, long den = 1) const {
        if (inf_) return infinity();
        mpq_class f(num, den);
        f.canonicalize();
        return GammaValue(mpq_class(q_ * f));
    }

    friend bool operator==(const GammaValue& a, const GammaValue& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.q_ == b.q_;
    }
    friend bool operator!=(const GammaValue& a, const GammaValue& b) { return !(a == b); }
    friend bool operator<(const GammaValue& a, const GammaValue& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator<=(const GammaValue& a, const GammaValue& b) { return a < b || a == b; }
    friend bool operator>(const GammaValue& a, const GammaValue& b) { return b < a; }
    friend bool operator>=(const GammaValue& a, const GammaValue& b) { return b <= a; }

    static GammaValue min(const GammaValue& a, const GammaValue& b) { return a < b ? a : b; }
    static GammaValue max(const GammaValue& a, const GammaValue& b) { return a < b ? b : a; }

    // Largest integer m with m <= value/k; requires a finite value.
    long floor_div(long k) const {
        if (inf_) throw Error("GammaValue: floor_div of infinity");
        mpz_class num = q_.get_num() ;
        mpz_class den = q_.get_den() * k;
        mpz_class m;
        mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return static_cast<long>(m.get_si());
    }

    // True when value * n is an integer.
    bool is_integral_times(long n) const {
        if (inf_) return false;
        mpq_class s = q_ * n;
        s.canonicalize();
        return s.get_den() == 1;
    }
    long integer_times(long n) const {
        mpq_class s = q_ * n;
        s.canonicalize();
        if (s.get_den() != 1) throw Error("GammaValue: not in the (1/N)Z lattice");
        return static_cast<long>(s.get_num().get_si());
    }

    std::string str() const {
        if (inf_) return "inf";
        return q_.get_str();
    }

private:
    bool inf_;
    mpq_class q_;
};

}  // namespace valcurve

#endif
