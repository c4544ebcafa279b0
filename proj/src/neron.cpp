#include "valcurve/neron.hpp"

#include <limits>

namespace valcurve {

FieldElem ResidueCurve::discriminant() const {
    FieldElem four = k.from_integer(4), tw7 = k.from_integer(27);
    return k.from_integer(-16) * (four * Abar.pow(3) + tw7 * Bbar * Bbar);
}

std::string ResidueCurve::str() const {
    return "Y^2=X^3+(" + Abar.str() + ")*X+(" + Bbar.str() + ")";
}

ResidueCurve reduce_curve(const ShortWeierstrass& c, const GammaValue& gamma) {
    try {
        return ResidueCurve{c.context().residue_field(),
                            c.A().residue_shift(gamma.scaled(2)),
                            c.B().residue_shift(gamma.scaled(3))};
    } catch (const NotIntegral&) {
        throw NotIntegralAfterScaling("gamma exceeds gamma_infinity");
    }
}

std::optional<ResiduePoint> singular_locus(const ResidueCurve& rc) {
    unsigned long ch = rc.k.characteristic();
    if (ch == 2 || ch == 3)
        throw Error("singular_locus requires residue characteristic not in {2,3}");
    if (!rc.discriminant().is_zero()) return std::nullopt;
    // the cubic has a repeated root r with A = -3r^2, B = 2r^3
    FieldElem x0 = rc.Abar.is_zero()
                       ? rc.k.zero()
                       : rc.k.from_integer(-3) * rc.Bbar /
                             (rc.k.from_integer(2) * rc.Abar);
    return ResiduePoint::affine(std::move(x0), rc.k.zero());
}

ResiduePoint reduce_point(const ShortWeierstrass& c, const GammaValue& gamma,
                          const CurvePoint& p) {
    if (p.is_infinity()) return ResiduePoint::infinity();
    GammaValue sx = p.x().val() - gamma;
    GammaValue sy = p.y().val() - gamma.scaled(3, 2);
    if (sx < GammaValue(0)) {
        // forced shape x' = pi^(-2m) u, y' = pi^(-3m) w; projective rescale
        // lands on (0:1:0)
        if (sy.scaled(2) != sx.scaled(3))
            throw NotOnCurve("negative-valuation point violates the curve pattern");
        return ResiduePoint::infinity();
    }
    try {
        return ResiduePoint::affine(p.x().residue_shift(gamma),
                                    p.y().residue_shift(gamma.scaled(3, 2)));
    } catch (const NotIntegral&) {
        throw NotOnCurve("integral x with non-integral y after scaling");
    }
}

bool smooth_reduction_member(const ShortWeierstrass& c, const GammaValue& gamma,
                             const CurvePoint& p) {
    ResiduePoint rp = reduce_point(c, gamma, p);
    std::optional<ResiduePoint> sing = singular_locus(reduce_curve(c, gamma));
    return !sing || rp != *sing;
}

bool good_reduction(const GeneralWeierstrass& c) {
    return c.discriminant().val_checked() == GammaValue(0);
}

bool good_reduction(const ShortWeierstrass& c) {
    return c.discriminant().val_checked() == GammaValue(0);
}

std::pair<ShortWeierstrass, long> minimalize(const ShortWeierstrass& c) {
    if (c.context().ramification() != 1)
        throw Error("minimalize requires a discrete value group (N = 1)");
    GammaValue va = c.A().val(), vb = c.B().val();
    long m;
    if (va.is_infinity() && vb.is_infinity())
        throw Error("degenerate curve");  // unreachable: discriminant nonzero
    if (va.is_infinity())
        m = vb.floor_div(6);
    else if (vb.is_infinity())
        m = va.floor_div(4);
    else
        m = std::min(va.floor_div(4), vb.floor_div(6));
    return {c.scale_standard(m), m};
}

namespace {

// lift of a residue-field constant to an integral element
ValuedElement lift_residue(const ValuedFieldContext& ctx, const FieldElem& r) {
    if (ctx.backend() == Backend::PadicRationals) return ctx.from_rational(r.base_value());
    return ctx.from_coefficient(r);
}

}  // namespace

std::optional<CurvePoint> bad_reduction_witness(const ShortWeierstrass& c,
                                                std::size_t budget) {
    if (c.discriminant().val_checked() == GammaValue(0))
        throw Error("bad_reduction_witness requires val(discriminant) > 0");
    if (c.context().ramification() == 1 && minimalize(c).second != 0)
        throw Error("bad_reduction_witness requires a minimal curve");

    const ValuedFieldContext& ctx = c.context();
    ResidueCurve rc = reduce_curve(c, GammaValue(0));
    std::optional<ResiduePoint> sing = singular_locus(rc);
    if (!sing) throw Error("bad reduction with smooth special fiber");  // unreachable
    ValuedElement x0 = lift_residue(ctx, sing->X);

    // candidate x-values over the singular residue, then small sweeps
    std::vector<ValuedElement> cands;
    cands.push_back(x0);
    for (long k = 1; k <= 6 && cands.size() < budget; ++k)
        for (long u = 1; u <= 5 && cands.size() < budget; ++u) {
            cands.push_back(x0 + ctx.from_integer(u) * ctx.uniformizer_pow(k));
            cands.push_back(x0 - ctx.from_integer(u) * ctx.uniformizer_pow(k));
        }
    for (long v = -3; v <= 3 && cands.size() < budget; ++v)
        cands.push_back(ctx.from_integer(v));

    std::vector<char> hit(cands.size(), 0);
    std::vector<CurvePoint> pts(cands.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < cands.size(); ++i) {
        try {
            CurvePoint p = c.lift_x(cands[i]);
            if (!smooth_reduction_member(c, GammaValue(0), p)) {
                pts[i] = p;
                hit[i] = 1;
            }
        } catch (const Error&) {
            // candidate has no liftable y; skip
        }
    }
    // deterministic first hit: lowest candidate index wins
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (hit[i]) return pts[i];
    return std::nullopt;
}

bool residue_on_curve(const ResidueCurve& rc, const ResiduePoint& p) {
    if (p.inf) return true;
    return p.Y * p.Y == p.X.pow(3) + rc.Abar * p.X + rc.Bbar;
}

ResiduePoint residue_neg(const ResiduePoint& p) {
    if (p.inf) return p;
    return ResiduePoint::affine(p.X, -p.Y);
}

std::optional<ResiduePoint> residue_add(const ResidueCurve& rc, const ResiduePoint& p,
                                        const ResiduePoint& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    std::optional<ResiduePoint> sing = singular_locus(rc);
    if (sing && (p == *sing || q == *sing)) return std::nullopt;
    FieldElem lambda = rc.k.zero();
    if (p.X == q.X) {
        if ((p.Y + q.Y).is_zero()) return std::make_optional(ResiduePoint::infinity());
        lambda = (rc.k.from_integer(3) * p.X * p.X + rc.Abar) /
                 (rc.k.from_integer(2) * p.Y);
    } else {
        lambda = (q.Y - p.Y) / (q.X - p.X);
    }
    FieldElem x3 = lambda * lambda - p.X - q.X;
    FieldElem y3 = lambda * (p.X - x3) - p.Y;
    ResiduePoint r = ResiduePoint::affine(std::move(x3), std::move(y3));
    if (sing && r == *sing) return std::nullopt;
    return r;
}

}  // namespace valcurve
