#include <doctest.h>

#include "valcurve/suites.hpp"

using namespace valcurve;

namespace {

std::vector<std::string> record_lines(const std::vector<VerdictRecord>& rs) {
    std::vector<std::string> out;
    for (const auto& r : rs) out.push_back(r.record_line());
    return out;
}

}  // namespace

TEST_CASE("serial runner is the reference for the parallel runner") {
    SuiteConfig cfg;
    cfg.samples = 6;
    for (const std::string& name : {"eq1", "product", "chain"}) {
        auto cases = build_suite(name, cfg);
        auto serial = run_cases(name, cases, RunMode::Serial);
        auto parallel = run_cases(name, cases, RunMode::Parallel);
        CHECK(record_lines(serial) == record_lines(parallel));
    }
}

TEST_CASE("identical seeds give identical records") {
    SuiteConfig cfg;
    cfg.samples = 5;
    cfg.seed = 99;
    auto a = run_cases("idempotent", build_suite("idempotent", cfg), RunMode::Parallel);
    auto b = run_cases("idempotent", build_suite("idempotent", cfg), RunMode::Parallel);
    CHECK(record_lines(a) == record_lines(b));
}

TEST_CASE("eq1 suite passes with the builtin fixture and catches corruption") {
    SuiteConfig cfg;
    auto rs = run_cases("eq1", build_suite("eq1", cfg), RunMode::Serial);
    for (const auto& r : rs) CHECK(r.pass);

    SuiteConfig corrupted;
    corrupted.eq1_fixture =
        "e=0,0 f=0,0 c=2*B\n"
        "e=0,0 f=1,1 c=-3\n"
        "e=0,1 f=0,0 c=A\n"
        "e=1,0 f=0,0 c=A\n"
        "e=1,2 f=0,0 c=1\n"
        "e=2,1 f=0,0 c=1\n";
    auto bad = run_cases("eq1", build_suite("eq1", corrupted), RunMode::Serial);
    bool found = false;
    for (const auto& r : bad)
        if (!r.pass) {
            found = true;
            CHECK(r.observed.find("mismatch at y1*y2") != std::string::npos);
        }
    CHECK(found);

    // round-trip: the builtin fixture text reproduces the expected polynomial
    SuiteConfig explicit_fixture;
    explicit_fixture.eq1_fixture = eq1_builtin_fixture();
    auto rt = run_cases("eq1", build_suite("eq1", explicit_fixture), RunMode::Serial);
    for (const auto& r : rt) CHECK(r.pass);
}

TEST_CASE("suite names are fixed") {
    CHECK(suite_names().size() == 7);
    CHECK(is_suite_name("idempotent"));
    CHECK_FALSE(is_suite_name("nonsense"));
    CHECK_THROWS_AS(build_suite("nonsense", SuiteConfig{}), Error);
}

TEST_CASE("sampled points lie on their curves") {
    for (const AnyCurve& any : builtin_battery()) {
        if (!std::holds_alternative<ShortWeierstrass>(any)) continue;
        const auto& c = std::get<ShortWeierstrass>(any);
        auto pts = sample_points(c, 12, 1);
        CHECK(pts.size() >= 4);
        for (const auto& p : pts) CHECK(c.is_on_curve(p));
    }
}

TEST_CASE("membership and homomorphism suites pass on the battery") {
    SuiteConfig cfg;
    cfg.samples = 24;
    for (const std::string& name : {"membership", "homomorphism", "grouplaw"}) {
        auto rs = run_cases(name, build_suite(name, cfg), RunMode::Parallel);
        RunSummary s = summarize(rs);
        INFO(name);
        CHECK(s.failed == 0);
        CHECK(s.total > 0);
    }
}
