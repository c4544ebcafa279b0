#ifndef VALCURVE_LITERAL_HPP
#define VALCURVE_LITERAL_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "valcurve/curve.hpp"
#include "valcurve/element.hpp"
#include "valcurve/genring.hpp"

namespace valcurve {

// Element literals: integers, rationals a/b, powers p^k and t^(a/b), sums
// and products with parentheses. "t" is the valuation-1 uniformizer of a
// Laurent backend, "p" the prime of a p-adic backend; other names resolve
// to transcendentals of the coefficient field.
ValuedElement parse_element(const std::string& text, const ValuedFieldContext& ctx);

// "a/b", integers, or "inf".
GammaValue parse_gamma(const std::string& text);
mpq_class parse_rational(const std::string& text);

// Curve records: {backend=padic,p=5,N=1,prec=40,form=short,A=5^3,B=5^6}
// or backend=laurent,k=Q|F5|Q(A,B),... with form=general carrying a1..a6.
using AnyCurve = std::variant<ShortWeierstrass, GeneralWeierstrass>;

std::string curve_record(const ShortWeierstrass& c);
std::string curve_record(const GeneralWeierstrass& c);
std::string curve_record(const AnyCurve& c);
AnyCurve parse_curve_record(const std::string& text);

const ValuedFieldContext& curve_context(const AnyCurve& c);

// Points: "inf" or "(x,y)" with element literals.
std::string point_record(const CurvePoint& p);
CurvePoint parse_point_record(const std::string& text, const ValuedFieldContext& ctx);

// Canonical polynomials as term lists, one term per line:
//   e=<ints> f=<bits> c=<element literal>
std::string poly_terms_record(const CanonicalPoly& g);
CanonicalPoly parse_poly_terms(const std::string& text, std::size_t arity,
                               const ValuedFieldContext& ctx);

// Flat key = value configuration text; '#' starts a comment. Repeated keys
// accumulate in order.
struct Config {
    std::vector<std::pair<std::string, std::string>> entries;

    bool has(const std::string& key) const;
    std::string get(const std::string& key, const std::string& fallback = "") const;
    std::vector<std::string> get_all(const std::string& key) const;
};

Config parse_config(const std::string& text);
Config load_config_file(const std::string& path);

std::vector<std::string> split_top_level(const std::string& s, char sep);

}  // namespace valcurve

#endif
