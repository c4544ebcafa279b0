#include <doctest.h>

#include <random>

#include "valcurve/gammafam.hpp"
#include "valcurve/neron.hpp"
#include "valcurve/suites.hpp"

using namespace valcurve;

namespace {

ShortWeierstrass q5_curve() {
    auto ctx = ValuedFieldContext::padic(5);
    return ShortWeierstrass(ctx.from_integer(125), ctx.from_integer(15625));
}

ShortWeierstrass curve_from(const char* record) {
    return std::get<ShortWeierstrass>(parse_curve_record(record));
}

}  // namespace

TEST_CASE("gamma_infinity") {
    CHECK(gamma_infinity(q5_curve()) == GammaValue(3, 2));
    CHECK(gamma_infinity(curve_from(
              "{backend=laurent,k=Q,N=1,prec=40,form=short,A=1,B=1}")) == GammaValue(0));
    // B = 0 exercises the min with INFINITY
    CHECK(gamma_infinity(curve_from(
              "{backend=laurent,k=Q,N=1,prec=40,form=short,A=t^2,B=0}")) == GammaValue(1));
}

TEST_CASE("eq2_value") {
    ShortWeierstrass c = q5_curve();
    const auto& ctx = c.context();
    CHECK(eq2_value(c, {GammaValue(3, 2), ctx.zero()}) == GammaValue(9, 4));
    // units with val(B)=0: min{0,...} = 0
    ShortWeierstrass u = curve_from("{backend=padic,p=7,N=1,form=short,A=1,B=1}");
    CHECK(eq2_value(u, {GammaValue(0), u.context().zero()}) == GammaValue(0));
    // b = 0 drops the center terms through val(0) = INFINITY
    CHECK(eq2_value(c, {GammaValue(0), ctx.zero()}) == GammaValue(0));
}

TEST_CASE("classification of idempotent candidates") {
    ShortWeierstrass c = q5_curve();
    const auto& ctx = c.context();
    auto good = curve_from("{backend=padic,p=7,N=1,form=short,A=1,B=1}");
    ClassifyResult r0 = classify_idempotent(good, {GammaValue(0), good.context().zero()});
    CHECK(r0.accepted());
    CHECK(*r0.gamma == GammaValue(0));

    ClassifyResult r1 = classify_idempotent(c, {GammaValue(3, 2), ctx.zero()});
    CHECK(r1.accepted());
    CHECK(*r1.gamma == GammaValue(3, 2));

    ClassifyResult r2 = classify_idempotent(c, {GammaValue(2), ctx.zero()});
    CHECK_FALSE(r2.accepted());
    CHECK(*r2.reject == RejectReason::GammaExceedsMax);

    ClassifyResult r3 = classify_idempotent(c, {GammaValue(1), ctx.one()});
    CHECK_FALSE(r3.accepted());
    CHECK(*r3.reject == RejectReason::CenterTooLarge);

    // acceptance region: val(b) >= a_val and a_val <= gamma_infinity; the
    // returned gamma depends only on a_val
    for (long anum = 0; anum <= 4; ++anum)
        for (long bval = 0; bval <= 3; ++bval) {
            GammaValue a(anum, 2);
            ValuedElement b = ctx.from_integer(3) * ctx.uniformizer_pow(bval);
            ClassifyResult r = classify_idempotent(c, {a, b});
            bool expect = GammaValue(bval) >= a && a <= GammaValue(3, 2);
            CHECK(r.accepted() == expect);
            if (r.accepted()) CHECK(*r.gamma == a);
        }
}

TEST_CASE("product of types is the join") {
    ShortWeierstrass c = q5_curve();
    GammaType zero(c, GammaValue(0)), one(c, GammaValue(1)), top(c, GammaValue(3, 2));
    CHECK(product_gamma(zero, zero).gamma() == GammaValue(0));
    CHECK(product_gamma(one, top).gamma() == GammaValue(3, 2));
    CHECK(product_gamma(top, one).gamma() == GammaValue(3, 2));
    // join semilattice laws on the grid
    std::vector<GammaType> ts = {zero, one, top};
    for (const auto& a : ts)
        for (const auto& b : ts) {
            CHECK(product_gamma(a, b).gamma() == product_gamma(b, a).gamma());
            CHECK(product_gamma(a, a).gamma() == a.gamma());
            CHECK(product_gamma(a, top).gamma() == GammaValue(3, 2));
            for (const auto& d : ts)
                CHECK(product_gamma(product_gamma(a, b), d).gamma() ==
                      product_gamma(a, product_gamma(b, d)).gamma());
        }

    auto other = curve_from("{backend=padic,p=7,N=1,form=short,A=1,B=1}");
    CHECK_THROWS_AS(product_gamma(zero, GammaType(other, GammaValue(0))), CurveMismatch);
    CHECK_THROWS_AS(GammaType(c, GammaValue(2)), Error);
}

TEST_CASE("symbolic product verification") {
    ShortWeierstrass good = curve_from("{backend=padic,p=7,N=1,form=short,A=1,B=1}");
    ProductReport r0 = verify_product_symbolic(good, GammaValue(0), GammaValue(0));
    CHECK(r0.pass);
    CHECK(r0.num_val == GammaValue(0));
    CHECK(r0.den_val == GammaValue(0));

    // ramified Laurent stand-in of the 5-adic example
    ShortWeierstrass c5 = curve_from(
        "{backend=laurent,k=F5,N=2,prec=80,form=short,A=t^3,B=t^6}");
    ProductReport r = verify_product_symbolic(c5, GammaValue(1), GammaValue(3, 2));
    CHECK(r.pass);
    CHECK(r.den_val == GammaValue(2));
    CHECK(r.num_val == GammaValue(7, 2));

    GammaValue top = gamma_infinity(c5);
    CHECK(verify_product_symbolic(c5, top, top).pass);
    CHECK_THROWS_AS(verify_product_symbolic(c5, GammaValue(1), GammaValue(0)), Error);
}

TEST_CASE("membership oracles") {
    ShortWeierstrass bad = curve_from(
        "{backend=laurent,k=Q,N=1,prec=40,form=short,A=t^2,B=0}");
    const auto& ctx = bad.context();
    CurvePoint origin = CurvePoint::affine(ctx.zero(), ctx.zero());
    GammaType t0(bad, GammaValue(0));
    CHECK(stab_member(t0, CurvePoint::infinity()));
    CHECK(fast_member(t0, CurvePoint::infinity()));
    CHECK_FALSE(stab_member(t0, origin));  // reduces to the cusp
    CHECK_FALSE(fast_member(t0, origin));

    ShortWeierstrass good = curve_from(
        "{backend=laurent,k=Q,N=1,prec=40,form=short,A=0,B=1}");
    CurvePoint far = good.lift_x(good.context().uniformizer_pow(-2));
    GammaType g0(good, GammaValue(0));
    CHECK(stab_member(g0, far));  // reduces to the smooth point at infinity
    CHECK(fast_member(g0, far));

    CurvePoint off = CurvePoint::affine(ctx.one(), ctx.one());
    CHECK_THROWS_AS(stab_member(t0, off), NotOnCurve);
}

TEST_CASE("subgroup closure on samples") {
    ShortWeierstrass c = curve_from(
        "{backend=laurent,k=F5,N=1,prec=40,form=short,A=t^2,B=2*t^3}");
    auto pts = sample_points(c, 8, 5);
    for (const GammaValue& g : {GammaValue(0), GammaValue(1, 2), GammaValue(1)}) {
        GammaType t(c, g);
        std::vector<CurvePoint> members;
        for (const auto& p : pts)
            if (stab_member(t, p)) members.push_back(p);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i; j < members.size() && j < i + 3; ++j) {
                CHECK(stab_member(t, c.add(members[i], members[j])));
                CHECK(stab_member(t, c.neg(members[i])));
            }
    }
}

TEST_CASE("stab and fast oracles agree across the battery") {
    for (const AnyCurve& any : builtin_battery()) {
        if (!std::holds_alternative<ShortWeierstrass>(any)) continue;
        const auto& c = std::get<ShortWeierstrass>(any);
        auto pts = sample_points(c, 8, 17);
        for (const GammaValue& g : default_gamma_grid(c)) {
            GammaType t(c, g);
            for (const auto& p : pts) CHECK(stab_member(t, p) == fast_member(t, p));
        }
    }
}

TEST_CASE("chain monotonicity") {
    ShortWeierstrass c = curve_from(
        "{backend=laurent,k=Q,N=1,prec=40,form=short,A=t^4,B=0}");
    const auto& ctx = c.context();
    CurvePoint origin = CurvePoint::affine(ctx.zero(), ctx.zero());

    ChainReport singleton = chain_check(c, {GammaValue(0)}, {origin});
    CHECK(singleton.pass);

    ChainReport idrep = chain_check(c, {GammaValue(0), GammaValue(1), GammaValue(2)},
                                    {CurvePoint::infinity()});
    CHECK(idrep.pass);

    ChainReport rep = chain_check(c, {GammaValue(0), GammaValue(1), GammaValue(2)},
                                  {origin, CurvePoint::infinity()});
    CHECK(rep.pass);
    // the origin enters strictly between the endpoints
    CHECK(rep.rows[0].member == std::vector<bool>{false, false, true});

    CHECK_THROWS_AS(chain_check(c, {GammaValue(1), GammaValue(0)}, {origin}), Error);
    CHECK_THROWS_AS(chain_check(c, {GammaValue(3)}, {origin}), Error);
}
