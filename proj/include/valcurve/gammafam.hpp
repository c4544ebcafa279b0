#ifndef VALCURVE_GAMMAFAM_HPP
#define VALCURVE_GAMMAFAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "valcurve/curve.hpp"
#include "valcurve/genring.hpp"

namespace valcurve {

// min{val(A)/2, val(B)/3}; the largest gamma the family supports.
GammaValue gamma_infinity(const ShortWeierstrass& c);

// Descriptor of the type p_gamma on a curve, standing for the subgroup
// E_gamma(O) = Stab(p_gamma).
class GammaType {
public:
    GammaType(ShortWeierstrass curve, GammaValue gamma);

    const ShortWeierstrass& curve() const { return curve_; }
    const GammaValue& gamma() const { return gamma_; }

private:
    ShortWeierstrass curve_;
    GammaValue gamma_;
};

// Candidate ball a*O + b for the x-pushforward of an idempotent type.
struct BallDescriptor {
    GammaValue a_val;      // finite
    ValuedElement center;  // b; may be zero
};

// val(d_y) for d with d_x generic in the ball: half of
// min{3 val(a), 2 val(a)+val(b), val(a)+val(3b^2+A), val(b^3+Ab+B)}.
GammaValue eq2_value(const ShortWeierstrass& c, const BallDescriptor& d);

enum class RejectReason { CenterTooLarge, GammaExceedsMax, YValuationMismatch };

std::string reject_reason_str(RejectReason r);

struct ClassifyResult {
    std::optional<GammaValue> gamma;  // accepted: the ball is a*O, center normalized to 0
    std::optional<RejectReason> reject;

    bool accepted() const { return gamma.has_value(); }
    std::string str() const;
};

ClassifyResult classify_idempotent(const ShortWeierstrass& c, const BallDescriptor& d);

// p_{gamma1} * p_{gamma2} = p_{max(gamma1, gamma2)}.
GammaType product_gamma(const GammaType& t1, const GammaType& t2);

struct ProductReport {
    bool pass = false;
    GammaValue num_val, den_val;
    GammaValue expected_num, expected_den;
    bool generic_ok = false;

    std::string str() const;
};

// Builds the (gamma1, gamma2) profile, pushes x through the group law and
// checks the expected numerator/denominator Gauss valuations plus
// ball-genericity at max(gamma1, gamma2). Requires gamma1 <= gamma2 <= gamma_inf.
ProductReport verify_product_symbolic(const ShortWeierstrass& c, const GammaValue& g1,
                                      const GammaValue& g2);

// Membership through the symbolic translate: (P*d)_x must be generic in the
// gamma-ball. Ground truth for the family.
bool stab_member(const GammaType& t, const CurvePoint& p);

// Membership through gamma-weighted reduction to the smooth locus.
bool fast_member(const GammaType& t, const CurvePoint& p);

struct ChainReport {
    struct Row {
        CurvePoint point;
        std::vector<bool> member;
    };
    bool pass = true;
    std::vector<GammaValue> gammas;
    std::vector<Row> rows;
    std::string counterexample;  // empty when pass

    std::string str() const;
};

// Membership must be monotone nondecreasing along a sorted gamma list.
ChainReport chain_check(const ShortWeierstrass& c, const std::vector<GammaValue>& gammas,
                        const std::vector<CurvePoint>& points);

}  // namespace valcurve

#endif
