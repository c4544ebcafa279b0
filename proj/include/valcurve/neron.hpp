#ifndef VALCURVE_NERON_HPP
#define VALCURVE_NERON_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valcurve/curve.hpp"

namespace valcurve {

// Short-form curve over the residue field; may be singular.
struct ResidueCurve {
    CoefficientField k;
    FieldElem Abar, Bbar;

    FieldElem discriminant() const;
    std::string str() const;
};

struct ResiduePoint {
    static ResiduePoint infinity() { return ResiduePoint{}; }
    static ResiduePoint affine(FieldElem X, FieldElem Y) {
        ResiduePoint p;
        p.inf = false;
        p.X = std::move(X);
        p.Y = std::move(Y);
        return p;
    }

    bool inf = true;
    FieldElem X, Y;

    bool operator==(const ResiduePoint& o) const {
        if (inf != o.inf) return false;
        return inf || (X == o.X && Y == o.Y);
    }
    bool operator!=(const ResiduePoint& o) const { return !(*this == o); }

    std::string str() const { return inf ? "inf" : "(" + X.str() + "," + Y.str() + ")"; }
};

// Residues of the gamma-scaled coefficients A/a^2, B/a^3.
ResidueCurve reduce_curve(const ShortWeierstrass& c, const GammaValue& gamma);

// The unique singular point when the residue discriminant vanishes
// (residue characteristic not 2 or 3), NONE otherwise.
std::optional<ResiduePoint> singular_locus(const ResidueCurve& rc);

// Gamma-weighted reduction: integral coordinates reduce termwise;
// negative-valuation points reduce to the point at infinity.
ResiduePoint reduce_point(const ShortWeierstrass& c, const GammaValue& gamma,
                          const CurvePoint& p);

bool smooth_reduction_member(const ShortWeierstrass& c, const GammaValue& gamma,
                             const CurvePoint& p);

bool good_reduction(const GeneralWeierstrass& c);
bool good_reduction(const ShortWeierstrass& c);

// Maximal u-rescaling keeping the coefficients integral; requires a
// discrete value group (N = 1). Returns the rescaled curve and m.
std::pair<ShortWeierstrass, long> minimalize(const ShortWeierstrass& c);

// Searches lifted candidates over the singular residue point (plus small
// coordinate sweeps) for a point outside the smooth-reduction subgroup.
// Requires val(discriminant) > 0 on a minimal curve.
std::optional<CurvePoint> bad_reduction_witness(const ShortWeierstrass& c,
                                                std::size_t budget = 200);

bool residue_on_curve(const ResidueCurve& rc, const ResiduePoint& p);
ResiduePoint residue_neg(const ResiduePoint& p);

// Chord-tangent sum on the smooth locus; nullopt when the construction
// touches the singular point (skipped, never silently passed).
std::optional<ResiduePoint> residue_add(const ResidueCurve& rc, const ResiduePoint& p,
                                        const ResiduePoint& q);

}  // namespace valcurve

#endif
