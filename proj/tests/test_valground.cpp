#include <doctest.h>

#include <random>

#include "valcurve/element.hpp"
#include "valcurve/suites.hpp"

using namespace valcurve;

TEST_CASE("value group arithmetic") {
    GammaValue half(1, 2), third(1, 3);
    CHECK(half + third == GammaValue(5, 6));
    CHECK(GammaValue(4, 8) == half);  // lowest terms
    CHECK(GammaValue(1, -2) == GammaValue(-1, 2));
    GammaValue inf = GammaValue::infinity();
    CHECK(inf + half == inf);
    CHECK(half < inf);
    CHECK(GammaValue::min(inf, half) == half);
    CHECK(half.scaled(3) == GammaValue(3, 2));
    CHECK(GammaValue(9).floor_div(4) == 2);
    CHECK(GammaValue(-1, 2).floor_div(4) == -1);
    CHECK(half.is_integral_times(2));
    CHECK_FALSE(half.is_integral_times(3));
    CHECK(half.str() == "1/2");
    CHECK(inf.str() == "inf");
}

TEST_CASE("p-adic valuations and residues") {
    auto ctx = ValuedFieldContext::padic(5);
    CHECK(ctx.from_integer(5).val() == GammaValue(1));
    CHECK(ctx.from_integer(0).val().is_infinity());
    CHECK(ctx.from_rational(mpq_class(3, 25)).val() == GammaValue(-2));
    CHECK(ctx.from_integer(7).residue() == CoefficientField::prime_field(5).from_integer(2));
    CHECK(ctx.from_rational(mpq_class(1, 3)).residue() ==
          CoefficientField::prime_field(5).from_integer(2));  // 3*2=6=1 mod 5
    CHECK_THROWS_AS(ctx.from_rational(mpq_class(1, 5)).residue(), NotIntegral);
}

TEST_CASE("Laurent valuations and residues") {
    auto ctx = ValuedFieldContext::laurent(CoefficientField::rationals(), 40);
    ValuedElement x = ctx.uniformizer_pow(3) + ctx.uniformizer_pow(5);
    CHECK(x.val() == GammaValue(3));
    CHECK(ctx.zero().val().is_infinity());
    CHECK(ctx.uniformizer_pow(1).residue().is_zero());
    ValuedElement y = ctx.from_integer(3) + ctx.from_integer(2) * ctx.uniformizer_pow(1);
    CHECK(y.residue() == CoefficientField::rationals().from_integer(3));

    // truncated zero: val not certifiable
    ValuedElement u = (ctx.one() + ctx.uniformizer_pow(1)).inverse();
    ValuedElement z = u * (ctx.one() + ctx.uniformizer_pow(1)) - ctx.one();
    CHECK(z.is_zero());
    CHECK_FALSE(z.is_exact_zero());
    CHECK_THROWS_AS(z.val_checked(), PrecisionExhausted);
    CHECK(z.val().is_infinity());
}

TEST_CASE("hensel square roots") {
    auto q5 = ValuedFieldContext::padic(5);
    CHECK(q5.from_integer(4).hensel_sqrt() == q5.from_integer(2));
    // canonical branch: res(-3) = 2 is the least square root of res(9) = 4
    ValuedElement r925 = q5.from_rational(mpq_class(9, 25)).hensel_sqrt();
    CHECK(r925 == q5.from_rational(mpq_class(-3, 5)));
    CHECK(r925 * r925 == q5.from_rational(mpq_class(9, 25)));
    CHECK_THROWS_AS(q5.from_integer(5).hensel_sqrt(), OddValuation);
    CHECK_THROWS_AS(q5.from_integer(2).hensel_sqrt(), NotASquare);
    CHECK_THROWS_AS(q5.from_integer(-1).hensel_sqrt(), NotRepresentable);
    CHECK_THROWS_AS(q5.from_integer(6).hensel_sqrt(), NotRepresentable);

    auto lt = ValuedFieldContext::laurent(CoefficientField::rationals(), 40);
    ValuedElement x = lt.one() + lt.uniformizer_pow(1);
    ValuedElement r = x.hensel_sqrt();
    CHECK(r * r == x);  // squaring oracle, coefficientwise to precision
    CHECK(r.residue() == CoefficientField::rationals().one());
    CHECK_THROWS_AS(lt.uniformizer_pow(1).hensel_sqrt(), OddValuation);
    // even valuation shifts out
    ValuedElement x2 = lt.uniformizer_pow(4) * x;
    ValuedElement r2 = x2.hensel_sqrt();
    CHECK(r2.val() == GammaValue(2));
    CHECK(r2 * r2 == x2);

    auto f5 = ValuedFieldContext::laurent(CoefficientField::prime_field(5), 40);
    ValuedElement s = (f5.from_integer(4) + f5.uniformizer_pow(1)).hensel_sqrt();
    CHECK(s * s == f5.from_integer(4) + f5.uniformizer_pow(1));
    CHECK(s.residue() == CoefficientField::prime_field(5).from_integer(2));
    CHECK_THROWS_AS((f5.from_integer(2) + f5.uniformizer_pow(1)).hensel_sqrt(),
                    NotASquare);

    auto f2 = ValuedFieldContext::laurent(CoefficientField::prime_field(2), 40);
    CHECK_THROWS_AS(f2.one().hensel_sqrt(), Error);
}

TEST_CASE("ramification") {
    auto base = ValuedFieldContext::laurent(CoefficientField::rationals(), 40);
    auto fine = base.ramified(2);
    CHECK(fine.ramification() == 2);
    CHECK(fine.uniformizer_pow(1).val() == GammaValue(1, 2));
    ValuedElement t = base.uniformizer_pow(1);
    ValuedElement embedded = t.embed(fine);
    CHECK(embedded.val() == GammaValue(1));
    // pi_new^2 = pi_old
    CHECK(fine.uniformizer_pow(1).pow(2) == embedded);
    CHECK_THROWS_AS(ValuedFieldContext::padic(5).ramified(2), UnsupportedRamification);

    // embedding preserves val and residue exactly
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        ValuedElement v = random_scaled_unit(base, rng);
        CHECK(v.embed(fine).val() == v.val());
        CHECK(v.embed(fine).residue() == v.residue());
    }
}

TEST_CASE("residue fields with adjoined transcendentals") {
    auto k = CoefficientField::rationals().with_transcendentals({"s"});
    FieldElem s = k.symbol("s");
    CHECK(s + k.one() - k.one() == s);
    FieldElem num = s * s - k.one();
    FieldElem den = s - k.one();
    CHECK(num / den == s + k.one());
    CHECK_THROWS_AS(k.with_transcendentals({"s"}), DuplicateSymbol);
    CHECK(k.str() == "Q(s)");

    // fraction arithmetic keeps elements reduced
    FieldElem r = (s + k.one()).inverse() + (s - k.one()).inverse();
    // = 2s/(s^2-1)
    CHECK(r * (s * s - k.one()) == k.from_integer(2) * s);

    auto k2 = CoefficientField::prime_field(13);
    CHECK(*k2.from_integer(4).sqrt() == k2.from_integer(2));
    CHECK(*k2.from_integer(3).sqrt() == k2.from_integer(4));  // 4^2=16=3, canonical min
    CHECK_FALSE(k2.from_integer(5).sqrt().has_value());

    // polynomial square roots in function fields
    auto kab = CoefficientField::rationals().with_transcendentals({"A", "B"});
    FieldElem a = kab.symbol("A"), b = kab.symbol("B");
    FieldElem sq = (a + b) * (a + b);
    CHECK(*sq.sqrt() == a + b);
    CHECK_FALSE((a * b + kab.one()).sqrt().has_value());
}

TEST_CASE("ultrametric axioms hold on random elements") {
    std::vector<ValuedFieldContext> ctxs = {
        ValuedFieldContext::padic(5),
        ValuedFieldContext::laurent(CoefficientField::rationals(), 40),
        ValuedFieldContext::laurent(CoefficientField::prime_field(7), 40).ramified(2)};
    std::mt19937_64 rng(2024);
    for (const auto& ctx : ctxs) {
        for (int i = 0; i < 250; ++i) {
            ValuedElement x = random_scaled_unit(ctx, rng);
            ValuedElement y = random_scaled_unit(ctx, rng);
            CHECK((x * y).val() == x.val() + y.val());
            GammaValue m = GammaValue::min(x.val(), y.val());
            CHECK((x + y).val() >= m);
            if (x.val() != y.val()) CHECK((x + y).val() == m);
        }
    }
}

TEST_CASE("residue is a ring homomorphism on integral elements") {
    auto ctx = ValuedFieldContext::laurent(CoefficientField::prime_field(5), 40);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        ValuedElement x = random_scaled_unit(ctx, rng);
        ValuedElement y = random_scaled_unit(ctx, rng);
        CHECK((x * y).residue() == x.residue() * y.residue());
        CHECK((x + y).residue() == x.residue() + y.residue());
        CHECK((x.residue().is_zero()) == (x.val() > GammaValue(0)));
    }
}

TEST_CASE("exact multivariate gcd") {
    using namespace valcurve::detail;
    FieldDesc k{FieldBase::Rationals, 0, {"s", "u"}};
    // f = (s+u)^2 * s, g = (s+u) * u
    MPoly splusu;
    splusu.t[{1, 0}] = 1;
    splusu.t[{0, 1}] = 1;
    MPoly s;
    s.t[{1, 0}] = 1;
    MPoly u;
    u.t[{0, 1}] = 1;
    MPoly f = mpoly_mul(k, mpoly_mul(k, splusu, splusu), s);
    MPoly g = mpoly_mul(k, splusu, u);
    MPoly d = mpoly_gcd(k, f, g);
    CHECK(d.t == splusu.t);  // monic already
    CHECK(mpoly_mul(k, mpoly_div_exact(k, f, d), d).t == f.t);
}
