#ifndef VALCURVE_CURVE_HPP
#define VALCURVE_CURVE_HPP

#include <string>

#include "valcurve/element.hpp"
#include "valcurve/errors.hpp"
#include "valcurve/gamma.hpp"

namespace valcurve {

class CurvePoint {
public:
    CurvePoint() = default;

    static CurvePoint infinity() {
        CurvePoint p;
        p.inf_ = true;
        return p;
    }
    static CurvePoint affine(ValuedElement x, ValuedElement y) {
        CurvePoint p;
        p.inf_ = false;
        p.x_ = std::move(x);
        p.y_ = std::move(y);
        return p;
    }

    bool is_infinity() const { return inf_; }
    const ValuedElement& x() const { return x_; }
    const ValuedElement& y() const { return y_; }

    bool operator==(const CurvePoint& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || (x_ == o.x_ && y_ == o.y_);
    }
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

    std::string str() const {
        if (inf_) return "inf";
        return "(" + x_.str() + "," + y_.str() + ")";
    }

private:
    bool inf_ = true;
    ValuedElement x_, y_;
};

struct BQuantities {
    ValuedElement b2, b4, b6, b8, delta;
};

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 with integral coefficients
// and nonzero discriminant.
class GeneralWeierstrass {
public:
    GeneralWeierstrass(ValuedElement a1, ValuedElement a2, ValuedElement a3,
                       ValuedElement a4, ValuedElement a6);

    const ValuedElement& a1() const { return a1_; }
    const ValuedElement& a2() const { return a2_; }
    const ValuedElement& a3() const { return a3_; }
    const ValuedElement& a4() const { return a4_; }
    const ValuedElement& a6() const { return a6_; }
    const ValuedFieldContext& context() const { return a1_.context(); }

    BQuantities b_quantities() const;
    const ValuedElement& discriminant() const { return delta_; }

    bool is_on_curve(const CurvePoint& p) const;
    CurvePoint neg(const CurvePoint& p) const;
    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;

    bool operator==(const GeneralWeierstrass& o) const;

private:
    ValuedElement a1_, a2_, a3_, a4_, a6_;
    ValuedElement delta_;
};

// Short form y^2 = x^3 + A x + B; requires residue characteristic not 2 or 3.
class ShortWeierstrass {
public:
    ShortWeierstrass(ValuedElement A, ValuedElement B);

    const ValuedElement& A() const { return A_; }
    const ValuedElement& B() const { return B_; }
    const ValuedFieldContext& context() const { return A_.context(); }

    GeneralWeierstrass as_general() const;
    const ValuedElement& discriminant() const { return delta_; }

    // x^3 + A x + B
    ValuedElement rhs_at(const ValuedElement& x) const;
    bool is_on_curve(const CurvePoint& p) const;
    CurvePoint neg(const CurvePoint& p) const;
    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;

    // Point with the given x-coordinate, y on hensel_sqrt's canonical branch.
    CurvePoint lift_x(const ValuedElement& x0) const;

    // Coefficients A/a^2, B/a^3 for a = pi^(gamma*N).
    ShortWeierstrass scale_short(const GammaValue& gamma) const;
    // u-substitution A/u^(4m), B/u^(6m) with u = pi^m.
    ShortWeierstrass scale_standard(long m) const;

    bool operator==(const ShortWeierstrass& o) const;

    std::string str() const;

private:
    ValuedElement A_, B_;
    ValuedElement delta_;
};

}  // namespace valcurve

#endif
