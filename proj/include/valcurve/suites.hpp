#ifndef VALCURVE_SUITES_HPP
#define VALCURVE_SUITES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "valcurve/gammafam.hpp"
#include "valcurve/genring.hpp"
#include "valcurve/literal.hpp"
#include "valcurve/neron.hpp"
#include "valcurve/records.hpp"

namespace valcurve {

struct CaseOutcome {
    std::string expected;
    std::string observed;
    bool pass = false;
    bool precision_failure = false;
};

struct SuiteCase {
    std::string id;
    std::function<CaseOutcome()> run;
};

enum class RunMode { Serial, Parallel };

// Runs cases (in parallel when requested and OpenMP is available) and
// returns records in case order regardless of completion order. The serial
// path is the reference implementation; both must produce identical records.
std::vector<VerdictRecord> run_cases(const std::string& suite,
                                     const std::vector<SuiteCase>& cases, RunMode mode);

struct SuiteConfig {
    std::vector<AnyCurve> curves;  // defaults to builtin_battery() when empty
    unsigned degree = 4;
    unsigned samples = 50;
    std::uint64_t seed = 42;
    std::vector<GammaValue> gamma_grid;          // empty: per-curve default grid
    std::optional<std::string> eq1_fixture;      // term list overriding the builtin
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

std::vector<SuiteCase> build_suite(const std::string& name, const SuiteConfig& cfg);

// Curves used when a configuration names none: Laurent backends over Q, F5,
// F7 (one ramified) and p-adic backends over Q5, Q7, spanning good and bad
// reduction.
std::vector<AnyCurve> builtin_battery();

// {0, gmax/3, gmax/2, gmax} deduplicated.
std::vector<GammaValue> default_gamma_grid(const ShortWeierstrass& c);

// Deterministic on-curve sample points: lift ladder plus group-law combos.
std::vector<CurvePoint> sample_points(const ShortWeierstrass& c, std::size_t want,
                                      std::uint64_t seed);

// pi^j * u with j uniform on 0..3 and u a short unit.
ValuedElement random_scaled_unit(const ValuedFieldContext& ctx, std::mt19937_64& rng);
// Nonzero canonical polynomial in one pair of total degree <= degree.
CanonicalPoly random_poly(const GenericProfile& one_pair, unsigned degree,
                          std::mt19937_64& rng);

// Expected right-hand side of the chord x-image numerator over the symbolic
// short curve (the builtin eq1 fixture).
std::string eq1_builtin_fixture();

}  // namespace valcurve

#endif
