#include <doctest.h>

#include <random>

#include "valcurve/genring.hpp"
#include "valcurve/suites.hpp"

using namespace valcurve;

namespace {

ShortWeierstrass q_laurent_curve(const char* a, const char* b) {
    auto ctx = ValuedFieldContext::laurent(CoefficientField::rationals(), 40);
    return ShortWeierstrass(parse_element(a, ctx), parse_element(b, ctx));
}

// independent oracle for the arity-1, gamma = 0, x-only base case: the
// valuation of a polynomial at the generic of O is the least coefficient
// valuation
GammaValue min_coefficient_rule(const CanonicalPoly& f) {
    GammaValue best = GammaValue::infinity();
    for (const auto& [m, c] : f.terms()) best = GammaValue::min(best, c.val());
    return best;
}

}  // namespace

TEST_CASE("normalize reduces the curve relation") {
    ShortWeierstrass c = q_laurent_curve("t^2", "t^3");
    const auto& ctx = c.context();
    GenericProfile prof(c, {GammaValue(0)});

    // y^2 -> x^3 + A x + B
    CanonicalPoly r = normalize({RawTerm{{0}, {2}, ctx.one()}}, prof);
    CanonicalPoly want(1);
    want.add_term(Monomial::x_var(1, 0, 3), ctx.one());
    want.add_term(Monomial::x_var(1, 0), c.A());
    want.add_term(Monomial::unit(1), c.B());
    CHECK(r == want);

    // (x+y)^2 = x^2 + 2xy + y^2 -> x^2 + 2xy + x^3 + Ax + B
    CanonicalPoly sq = normalize({RawTerm{{2}, {0}, ctx.one()},
                                  RawTerm{{1}, {1}, ctx.from_integer(2)},
                                  RawTerm{{0}, {2}, ctx.one()}},
                                 prof);
    CanonicalPoly want2 = want;
    want2.add_term(Monomial::x_var(1, 0, 2), ctx.one());
    {
        Monomial m = Monomial::unit(1);
        m.xe[0] = 1;
        m.ye[0] = 1;
        want2.add_term(m, ctx.from_integer(2));
    }
    CHECK(sq == want2);

    // idempotence of normalization: multiplying canonical forms stays canonical
    CanonicalPoly prod = prof.mul(sq, sq);
    for (const auto& [m, coeff] : prod.terms()) CHECK(m.ye[0] <= 1);
}

TEST_CASE("general-form relation carries the y-linear part") {
    auto q5 = ValuedFieldContext::padic(5);
    GeneralWeierstrass g(q5.one(), q5.zero(), q5.from_integer(3), q5.zero(),
                         q5.from_integer(4));
    GenericProfile prof(g, 1);
    // y^2 = x^3 + a2 x^2 + a4 x + a6 - a1 xy - a3 y
    CanonicalPoly r = normalize({RawTerm{{0}, {2}, q5.one()}}, prof);
    CanonicalPoly want(1);
    want.add_term(Monomial::x_var(1, 0, 3), q5.one());
    want.add_term(Monomial::unit(1), q5.from_integer(4));
    {
        Monomial m = Monomial::unit(1);
        m.xe[0] = 1;
        m.ye[0] = 1;
        want.add_term(m, -q5.one());
    }
    want.add_term(Monomial::y_var(1, 0), q5.from_integer(-3));
    CHECK(r == want);
}

TEST_CASE("gauss valuation base case agrees with the min-coefficient rule") {
    ShortWeierstrass c = q_laurent_curve("t^2", "t^3");
    GenericProfile prof(c, {GammaValue(0)});
    CHECK(gauss_val(prof.x_var(0), prof) == GammaValue(0));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        CanonicalPoly f(1);
        unsigned nt = 1 + rng() % 5;
        for (unsigned k = 0; k < nt; ++k)
            f.add_term(Monomial::x_var(1, 0, rng() % 7),
                       random_scaled_unit(c.context(), rng));
        if (f.is_zero()) continue;
        CHECK(gauss_val(f, prof) == min_coefficient_rule(f));
    }
}

TEST_CASE("gauss valuation weights") {
    ShortWeierstrass c = q_laurent_curve("t^2", "t^3");
    for (const GammaValue& g : {GammaValue(0), GammaValue(1, 2), GammaValue(1)}) {
        GenericProfile prof(c, {g, g});
        CanonicalPoly d = prof.x_var(0) - prof.x_var(1);
        CHECK(gauss_val(d, prof) == g);
        CanonicalPoly y0 = prof.y_var(0);
        CHECK(gauss_val(y0, prof) == g.scaled(3, 2));
        CHECK(gauss_val(prof.zero(), prof).is_infinity());
    }
}

TEST_CASE("gauss valuation is multiplicative") {
    std::mt19937_64 rng(77);
    for (const AnyCurve& any : builtin_battery()) {
        if (!std::holds_alternative<ShortWeierstrass>(any)) continue;
        const auto& c = std::get<ShortWeierstrass>(any);
        GammaValue g = gamma_infinity(c).scaled(1, 2);
        GenericProfile prof2(c, {g, GammaValue(0)});
        GenericProfile onep(c, {g});
        for (int i = 0; i < 40; ++i) {
            // random polys in both pairs via embedding of one-pair polys
            CanonicalPoly f(2), h(2);
            for (int k = 0; k < 3; ++k) {
                Monomial m = Monomial::unit(2);
                m.xe[0] = rng() % 3;
                m.xe[1] = rng() % 2;
                m.ye[rng() % 2] = rng() % 2;
                f.add_term(m, random_scaled_unit(c.context(), rng));
                Monomial m2 = Monomial::unit(2);
                m2.xe[0] = rng() % 2;
                m2.xe[1] = rng() % 3;
                m2.ye[rng() % 2] = rng() % 2;
                h.add_term(m2, random_scaled_unit(c.context(), rng));
            }
            if (f.is_zero() || h.is_zero()) continue;
            CHECK(gauss_val(prof2.mul(f, h), prof2) ==
                  gauss_val(f, prof2) + gauss_val(h, prof2));
            CHECK(gauss_val(f + h, prof2) >=
                  GammaValue::min(gauss_val(f, prof2), gauss_val(h, prof2)));
        }
    }
}

TEST_CASE("rational expression valuations") {
    ShortWeierstrass c = q_laurent_curve("t^2", "t^3");
    GenericProfile prof(c, {GammaValue(0)});
    RatExpr same(prof.x_var(0), prof.x_var(0));
    CHECK(rat_val(same, prof) == GammaValue(0));
    CHECK_THROWS_AS(RatExpr(prof.x_var(0), prof.zero()), DivisionByZero);
}

TEST_CASE("residues onto the residue-curve ring") {
    ShortWeierstrass c = q_laurent_curve("t^2", "t^3");
    const auto& ctx = c.context();
    GenericProfile prof(c, {GammaValue(0)});
    CoefficientField k = prof.residue_field();

    ResidueCurvePoly rx = residue_at(prof.x_var(0), prof);
    ResidueCurvePoly wantx(1);
    wantx.add_term(Monomial::x_var(1, 0), k.one());
    CHECK(rx == wantx);

    CanonicalPoly tx = prof.x_var(0).scaled(ctx.uniformizer_pow(1));
    CHECK(residue_at(tx, prof).is_zero());

    // reduce then residue vs residue-ring multiplication
    CanonicalPoly ysq = normalize({RawTerm{{0}, {2}, ctx.one()}}, prof);
    ResidueCurvePoly route1 = residue_at(ysq, prof);
    ResidueCurvePoly y = residue_at(prof.y_var(0), prof);
    ResidueCurvePoly route2 = ResidueCurvePoly::mul(y, y, prof.residue_relations());
    CHECK(route1 == route2);
    // at gamma=0 this curve reduces to the cusp: Abar = Bbar = 0
    ResidueCurvePoly cusp(1);
    cusp.add_term(Monomial::x_var(1, 0, 3), k.one());
    CHECK(route1 == cusp);

    CanonicalPoly neg = prof.constant(ctx.uniformizer_pow(-1));
    CHECK_THROWS_AS(residue_at(neg, prof), NotIntegral);
}

TEST_CASE("residue_at is multiplicative on integral polynomials") {
    ShortWeierstrass c = q_laurent_curve("t^2", "t^3");
    GammaValue g(1, 2);
    GenericProfile prof(c, {g, g});
    std::mt19937_64 rng(123);
    for (int i = 0; i < 60; ++i) {
        CanonicalPoly f(2), h(2);
        for (int k = 0; k < 3; ++k) {
            Monomial m = Monomial::unit(2);
            m.xe[0] = rng() % 2;
            m.xe[1] = rng() % 2;
            m.ye[rng() % 2] = rng() % 2;
            f.add_term(m, random_scaled_unit(c.context(), rng));
            Monomial m2 = Monomial::unit(2);
            m2.xe[rng() % 2] = rng() % 3;
            h.add_term(m2, random_scaled_unit(c.context(), rng));
        }
        if (f.is_zero() || h.is_zero()) continue;
        ResidueCurvePoly lhs = residue_at(prof.mul(f, h), prof);
        ResidueCurvePoly rhs = ResidueCurvePoly::mul(
            residue_at(f, prof), residue_at(h, prof), prof.residue_relations());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("group-law composition") {
    ShortWeierstrass c = q_laurent_curve("t^2", "t^3");
    GenericProfile prof(c, {GammaValue(0)});

    // translation by the identity returns the polynomial unchanged
    CanonicalPoly x = prof.x_var(0);
    RatExpr r = compose_group_law(x, ComposeMode::translate(CurvePoint::infinity()), prof);
    CHECK(r.num == x);
    CHECK(r.den == prof.one());

    // translation by a concrete point: denominator is (g_x - x)^2, here on
    // the 2-torsion point of y^2 = x^3 + t^2 x
    ShortWeierstrass c2 = q_laurent_curve("t^2", "0");
    GenericProfile prof2(c2, {GammaValue(0)});
    CurvePoint tors = CurvePoint::affine(c2.context().zero(), c2.context().zero());
    RatExpr tr = compose_group_law(prof2.x_var(0), ComposeMode::translate(tors), prof2);
    CanonicalPoly den_want = prof2.mul(prof2.x_var(0), prof2.x_var(0));
    CHECK(tr.den == den_want);  // (0 - x)^2 = x^2

    CHECK_THROWS_AS(compose_group_law(x, ComposeMode::add(0, 0), prof), Error);
    CurvePoint off = CurvePoint::affine(c.context().one(), c.context().one());
    CHECK_THROWS_AS(compose_group_law(x, ComposeMode::translate(off), prof), NotOnCurve);
}

TEST_CASE("ball genericity") {
    ShortWeierstrass c = q_laurent_curve("t^2", "t^3");
    for (const GammaValue& g : {GammaValue(0), GammaValue(1, 2), GammaValue(1)}) {
        GenericProfile prof(c, {g});
        RatExpr xv(prof.x_var(0), prof.one());
        CHECK(is_ball_generic(xv, g, prof));
        long steps = g.is_integral_times(1) ? g.integer_times(1) : 0;
        RatExpr cst(prof.constant(c.context().uniformizer_pow(steps)), prof.one());
        CHECK_FALSE(is_ball_generic(cst, GammaValue(steps), prof));
        // wrong gamma fails on the valuation test
        CHECK_FALSE(is_ball_generic(xv, g + GammaValue(1), prof));
    }
}
