#include "valcurve/curve.hpp"

namespace valcurve {

namespace {

void check_integral(const ValuedElement& a, const char* name) {
    if (a.is_zero() && !a.is_exact_zero())
        throw PrecisionExhausted(std::string("coefficient ") + name +
                                 " indistinguishable from zero");
    if (a.val() < GammaValue(0))
        throw NotIntegral(std::string("coefficient ") + name + " is not integral");
}

void check_nonsingular(const ValuedElement& delta) {
    if (delta.is_exact_zero()) throw Error("discriminant is zero");
    if (delta.is_zero())
        throw PrecisionExhausted("discriminant indistinguishable from zero");
}

}  // namespace

GeneralWeierstrass::GeneralWeierstrass(ValuedElement a1, ValuedElement a2,
                                       ValuedElement a3, ValuedElement a4,
                                       ValuedElement a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
      a6_(std::move(a6)) {
    const ValuedFieldContext& ctx = a1_.context();
    if (a2_.context() != ctx || a3_.context() != ctx || a4_.context() != ctx ||
        a6_.context() != ctx)
        throw Error("curve coefficients from different contexts");
    check_integral(a1_, "a1");
    check_integral(a2_, "a2");
    check_integral(a3_, "a3");
    check_integral(a4_, "a4");
    check_integral(a6_, "a6");
    delta_ = b_quantities().delta;
    check_nonsingular(delta_);
}

BQuantities GeneralWeierstrass::b_quantities() const {
    const ValuedFieldContext& ctx = a1_.context();
    auto c = [&ctx](long v) { return ctx.from_integer(v); };
    ValuedElement b2 = a1_ * a1_ + c(4) * a2_;
    ValuedElement b4 = c(2) * a4_ + a1_ * a3_;
    ValuedElement b6 = a3_ * a3_ + c(4) * a6_;
    ValuedElement b8 = a1_ * a1_ * a6_ + c(4) * a2_ * a6_ - a1_ * a3_ * a4_ +
                       a2_ * a3_ * a3_ - a4_ * a4_;
    ValuedElement delta = -(b2 * b2 * b8) - c(8) * b4.pow(3) - c(27) * b6 * b6 +
                          c(9) * b2 * b4 * b6;
    return BQuantities{std::move(b2), std::move(b4), std::move(b6), std::move(b8),
                       std::move(delta)};
}

bool GeneralWeierstrass::is_on_curve(const CurvePoint& p) const {
    if (p.is_infinity()) return true;
    const ValuedElement& x = p.x();
    const ValuedElement& y = p.y();
    ValuedElement lhs = y * y + a1_ * x * y + a3_ * y;
    ValuedElement rhs = x.pow(3) + a2_ * x * x + a4_ * x + a6_;
    return lhs == rhs;
}

CurvePoint GeneralWeierstrass::neg(const CurvePoint& p) const {
    if (p.is_infinity()) return p;
    return CurvePoint::affine(p.x(), -p.y() - a1_ * p.x() - a3_);
}

CurvePoint GeneralWeierstrass::add(const CurvePoint& p, const CurvePoint& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const ValuedFieldContext& ctx = a1_.context();
    auto c = [&ctx](long v) { return ctx.from_integer(v); };
    const ValuedElement &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    ValuedElement lambda, nu;
    if (x1 == x2) {
        if (q == neg(p)) return CurvePoint::infinity();
        // doubling; the tangent denominator is nonzero here
        ValuedElement den = c(2) * y1 + a1_ * x1 + a3_;
        lambda = (c(3) * x1 * x1 + c(2) * a2_ * x1 + a4_ - a1_ * y1) / den;
        nu = y1 - lambda * x1;
    } else {
        ValuedElement den = x2 - x1;
        lambda = (y2 - y1) / den;
        nu = (y1 * x2 - y2 * x1) / den;
    }
    ValuedElement x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
    ValuedElement y3 = -(lambda + a1_) * x3 - nu - a3_;
    return CurvePoint::affine(std::move(x3), std::move(y3));
}

bool GeneralWeierstrass::operator==(const GeneralWeierstrass& o) const {
    return context() == o.context() && a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ &&
           a4_ == o.a4_ && a6_ == o.a6_;
}

ShortWeierstrass::ShortWeierstrass(ValuedElement A, ValuedElement B)
    : A_(std::move(A)), B_(std::move(B)) {
    const ValuedFieldContext& ctx = A_.context();
    if (B_.context() != ctx) throw Error("curve coefficients from different contexts");
    unsigned long rc = ctx.residue_characteristic();
    if (rc == 2 || rc == 3)
        throw Error("short Weierstrass form requires residue characteristic not in {2,3}");
    check_integral(A_, "A");
    check_integral(B_, "B");
    ValuedElement four = ctx.from_integer(4), tw7 = ctx.from_integer(27);
    delta_ = ctx.from_integer(-16) * (four * A_.pow(3) + tw7 * B_ * B_);
    check_nonsingular(delta_);
}

GeneralWeierstrass ShortWeierstrass::as_general() const {
    const ValuedFieldContext& ctx = A_.context();
    return GeneralWeierstrass(ctx.zero(), ctx.zero(), ctx.zero(), A_, B_);
}

ValuedElement ShortWeierstrass::rhs_at(const ValuedElement& x) const {
    return x.pow(3) + A_ * x + B_;
}

bool ShortWeierstrass::is_on_curve(const CurvePoint& p) const {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == rhs_at(p.x());
}

CurvePoint ShortWeierstrass::neg(const CurvePoint& p) const {
    if (p.is_infinity()) return p;
    return CurvePoint::affine(p.x(), -p.y());
}

CurvePoint ShortWeierstrass::add(const CurvePoint& p, const CurvePoint& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const ValuedFieldContext& ctx = A_.context();
    const ValuedElement &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    ValuedElement lambda, nu;
    if (x1 == x2) {
        if ((y1 + y2).is_zero()) return CurvePoint::infinity();
        lambda = (ctx.from_integer(3) * x1 * x1 + A_) / (ctx.from_integer(2) * y1);
        nu = y1 - lambda * x1;
    } else {
        ValuedElement den = x2 - x1;
        lambda = (y2 - y1) / den;
        nu = (y1 * x2 - y2 * x1) / den;
    }
    ValuedElement x3 = lambda * lambda - x1 - x2;
    ValuedElement y3 = -lambda * x3 - nu;
    return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint ShortWeierstrass::lift_x(const ValuedElement& x0) const {
    ValuedElement rhs = rhs_at(x0);
    if (rhs.is_exact_zero()) return CurvePoint::affine(x0, x0.context().zero());
    return CurvePoint::affine(x0, rhs.hensel_sqrt());
}

ShortWeierstrass ShortWeierstrass::scale_short(const GammaValue& gamma) const {
    const ValuedFieldContext& ctx = A_.context();
    if (gamma.is_infinity()) throw Error("scale_short: gamma must be finite");
    long N = ctx.ramification();
    if (!gamma.is_integral_times(N))
        throw UnsupportedRamification(
            "no element of valuation " + gamma.str() + " in this context; ramify first");
    long s = gamma.integer_times(N);
    ValuedElement A2 = A_ * ctx.uniformizer_pow(-2 * s);
    ValuedElement B2 = B_ * ctx.uniformizer_pow(-3 * s);
    if (A2.val() < GammaValue(0) || B2.val() < GammaValue(0))
        throw NotIntegralAfterScaling("gamma exceeds gamma_infinity");
    return ShortWeierstrass(std::move(A2), std::move(B2));
}

ShortWeierstrass ShortWeierstrass::scale_standard(long m) const {
    const ValuedFieldContext& ctx = A_.context();
    ValuedElement A2 = A_ * ctx.uniformizer_pow(-4 * m);
    ValuedElement B2 = B_ * ctx.uniformizer_pow(-6 * m);
    if (A2.val() < GammaValue(0) || B2.val() < GammaValue(0))
        throw NotIntegralAfterScaling("coefficients not integral after u-scaling");
    return ShortWeierstrass(std::move(A2), std::move(B2));
}

bool ShortWeierstrass::operator==(const ShortWeierstrass& o) const {
    return context() == o.context() && A_ == o.A_ && B_ == o.B_;
}

std::string ShortWeierstrass::str() const {
    return "y^2=x^3+(" + A_.str() + ")*x+(" + B_.str() + ")";
}

}  // namespace valcurve
