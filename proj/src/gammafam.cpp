#include "valcurve/gammafam.hpp"

#include <sstream>

#include "valcurve/neron.hpp"

namespace valcurve {

GammaValue gamma_infinity(const ShortWeierstrass& c) {
    return GammaValue::min(c.A().val().scaled(1, 2), c.B().val().scaled(1, 3));
}

GammaType::GammaType(ShortWeierstrass curve, GammaValue gamma)
    : curve_(std::move(curve)), gamma_(std::move(gamma)) {
    if (gamma_.is_infinity()) throw Error("GammaType: gamma must be finite");
    if (gamma_ > gamma_infinity(curve_))
        throw Error("GammaType: gamma exceeds gamma_infinity");
}

GammaValue eq2_value(const ShortWeierstrass& c, const BallDescriptor& d) {
    if (d.a_val.is_infinity()) throw Error("eq2_value: a_val must be finite");
    const ValuedElement& b = d.center;
    ValuedElement three = c.context().from_integer(3);
    GammaValue t1 = d.a_val.scaled(3);
    GammaValue t2 = d.a_val.scaled(2) + b.val_checked();
    GammaValue t3 = d.a_val + (three * b * b + c.A()).val_checked();
    GammaValue t4 = (b.pow(3) + c.A() * b + c.B()).val_checked();
    GammaValue m = GammaValue::min(GammaValue::min(t1, t2), GammaValue::min(t3, t4));
    return m.scaled(1, 2);
}

std::string reject_reason_str(RejectReason r) {
    switch (r) {
        case RejectReason::CenterTooLarge: return "CENTER_TOO_LARGE";
        case RejectReason::GammaExceedsMax: return "GAMMA_EXCEEDS_MAX";
        case RejectReason::YValuationMismatch: return "Y_VALUATION_MISMATCH";
    }
    return "?";
}

std::string ClassifyResult::str() const {
    if (accepted()) return "gamma=" + gamma->str();
    return "REJECT(" + reject_reason_str(*reject) + ")";
}

ClassifyResult classify_idempotent(const ShortWeierstrass& c, const BallDescriptor& d) {
    ClassifyResult res;
    if (d.center.val_checked() < d.a_val) {
        res.reject = RejectReason::CenterTooLarge;
        return res;
    }
    if (d.a_val > gamma_infinity(c)) {
        res.reject = RejectReason::GammaExceedsMax;
        return res;
    }
    if (eq2_value(c, d) != d.a_val.scaled(3, 2)) {
        res.reject = RejectReason::YValuationMismatch;
        return res;
    }
    res.gamma = d.a_val;  // center absorbed: the ball equals a*O
    return res;
}

GammaType product_gamma(const GammaType& t1, const GammaType& t2) {
    if (!(t1.curve() == t2.curve()))
        throw CurveMismatch("product of types on different curves");
    return GammaType(t1.curve(), GammaValue::max(t1.gamma(), t2.gamma()));
}

std::string ProductReport::str() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << " num_val=" << num_val.str()
       << " (expected " << expected_num.str() << ") den_val=" << den_val.str()
       << " (expected " << expected_den.str() << ") generic="
       << (generic_ok ? "yes" : "no");
    return os.str();
}

ProductReport verify_product_symbolic(const ShortWeierstrass& c, const GammaValue& g1,
                                      const GammaValue& g2) {
    if (!(g1 <= g2 && g2 <= gamma_infinity(c)))
        throw Error("verify_product_symbolic requires gamma1 <= gamma2 <= gamma_infinity");
    GenericProfile prof(c, {g1, g2});
    GenericProfile one_pair(c, {g1});
    RatExpr r = compose_group_law(one_pair.x_var(0), ComposeMode::add(0, 1), prof);
    ProductReport rep;
    rep.num_val = gauss_val(r.num, prof);
    rep.den_val = gauss_val(r.den, prof);
    rep.expected_num = g1.scaled(2) + g2;
    rep.expected_den = g1.scaled(2);
    rep.generic_ok = is_ball_generic(r, GammaValue::max(g1, g2), prof);
    rep.pass = rep.num_val == rep.expected_num && rep.den_val == rep.expected_den &&
               rep.generic_ok;
    return rep;
}

bool stab_member(const GammaType& t, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    if (!t.curve().is_on_curve(p)) throw NotOnCurve("stab_member: point not on curve");
    GenericProfile prof(t.curve(), {t.gamma()});
    RatExpr r = compose_group_law(prof.x_var(0), ComposeMode::translate(p), prof);
    return is_ball_generic(r, t.gamma(), prof);
}

bool fast_member(const GammaType& t, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    if (!t.curve().is_on_curve(p)) throw NotOnCurve("fast_member: point not on curve");
    return smooth_reduction_member(t.curve(), t.gamma(), p);
}

std::string ChainReport::str() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL");
    if (!counterexample.empty()) os << " " << counterexample;
    return os.str();
}

ChainReport chain_check(const ShortWeierstrass& c, const std::vector<GammaValue>& gammas,
                        const std::vector<CurvePoint>& points) {
    GammaValue gmax = gamma_infinity(c);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (gammas[i] > gmax) throw Error("chain_check: gamma exceeds gamma_infinity");
        if (i && gammas[i] < gammas[i - 1]) throw Error("chain_check: gammas not sorted");
    }
    ChainReport rep;
    rep.gammas = gammas;
    for (const CurvePoint& p : points) {
        ChainReport::Row row;
        row.point = p;
        for (const GammaValue& g : gammas)
            row.member.push_back(stab_member(GammaType(c, g), p));
        for (std::size_t i = 1; i < row.member.size(); ++i) {
            if (row.member[i - 1] && !row.member[i]) {
                rep.pass = false;
                if (rep.counterexample.empty()) {
                    rep.counterexample = "point " + p.str() + " member at gamma=" +
                                         gammas[i - 1].str() + " but not at gamma=" +
                                         gammas[i].str();
                }
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace valcurve
