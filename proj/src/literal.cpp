#include "valcurve/literal.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace valcurve {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
    mpz_class integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected an integer", start);
        return mpz_class(s.substr(start, pos - start));
    }
    std::string name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError("expected a name", start);
        return s.substr(start, pos - start);
    }
};

struct Value {
    ValuedElement v;
    bool is_uniformizer = false;  // bare 't' (Laurent) or 'p' (p-adic)
};

class ElementParser {
public:
    ElementParser(const std::string& text, const ValuedFieldContext& ctx)
        : lx_{text}, ctx_(ctx) {}

    ValuedElement parse() {
        ValuedElement v = expr();
        if (!lx_.eof()) throw ParseError("trailing input", lx_.pos);
        return v;
    }

private:
    Lexer lx_;
    const ValuedFieldContext& ctx_;

    ValuedElement expr() {
        bool neg = false;
        if (lx_.accept('-'))
            neg = true;
        else
            lx_.accept('+');
        ValuedElement v = term();
        if (neg) v = -v;
        while (true) {
            if (lx_.accept('+'))
                v = v + term();
            else if (lx_.accept('-'))
                v = v - term();
            else
                break;
        }
        return v;
    }

    ValuedElement term() {
        ValuedElement v = factor();
        while (lx_.accept('*')) v = v * factor();
        return v;
    }

    // exponent := integer | '(' integer ('/' integer)? ')'
    mpq_class exponent() {
        if (lx_.accept('(')) {
            mpz_class n = lx_.integer();
            mpz_class d = 1;
            if (lx_.accept('/')) d = lx_.integer();
            lx_.expect(')');
            if (d == 0) throw ParseError("zero denominator in exponent", lx_.pos);
            mpq_class q(n, d);
            q.canonicalize();
            return q;
        }
        return mpq_class(lx_.integer());
    }

    ValuedElement pow_value(const Value& base, const mpq_class& e) {
        if (e.get_den() == 1) {
            long k = static_cast<long>(e.get_num().get_si());
            if (base.is_uniformizer && ctx_.backend() == Backend::Laurent)
                return ctx_.uniformizer_pow(k * ctx_.ramification());
            return base.v.pow(k);
        }
        if (!base.is_uniformizer)
            throw ParseError("fractional exponent on a non-uniformizer", lx_.pos);
        if (ctx_.backend() != Backend::Laurent)
            throw ParseError("fractional p-adic exponent is not representable", lx_.pos);
        GammaValue g(e);
        if (!g.is_integral_times(ctx_.ramification()))
            throw ParseError("exponent outside the value lattice; ramify the context",
                             lx_.pos);
        return ctx_.uniformizer_pow(g.integer_times(ctx_.ramification()));
    }

    ValuedElement factor() {
        Value base = atom();
        if (lx_.accept('^')) return pow_value(base, exponent());
        if (base.is_uniformizer && ctx_.backend() == Backend::Laurent)
            return ctx_.uniformizer_pow(ctx_.ramification());
        return base.v;
    }

    Value atom() {
        char c = lx_.peek();
        if (c == '(') {
            lx_.expect('(');
            ValuedElement v = expr();
            lx_.expect(')');
            return {v, false};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            mpz_class n = lx_.integer();
            // rational literal a/b (b a positive integer, not a division op)
            std::size_t save = lx_.pos;
            if (lx_.accept('/')) {
                if (std::isdigit(static_cast<unsigned char>(lx_.peek()))) {
                    mpz_class d = lx_.integer();
                    if (d == 0) throw ParseError("zero denominator", lx_.pos);
                    mpq_class q(n, d);
                    q.canonicalize();
                    return {ctx_.from_rational(q), false};
                }
                lx_.pos = save;
            }
            return {ctx_.from_rational(mpq_class(n)), false};
        }
        std::string id = lx_.name();
        if (id == "t") {
            if (ctx_.backend() != Backend::Laurent)
                throw ParseError("'t' is a Laurent-backend literal", lx_.pos);
            return {ctx_.uniformizer_pow(ctx_.ramification()), true};
        }
        if (id == "p") {
            if (ctx_.backend() != Backend::PadicRationals)
                throw ParseError("'p' is a p-adic literal", lx_.pos);
            return {ctx_.from_integer(static_cast<long>(ctx_.prime())), true};
        }
        if (ctx_.backend() == Backend::Laurent &&
            ctx_.coefficient_field().symbol_index(id))
            return {ctx_.from_coefficient(ctx_.coefficient_field().symbol(id)), false};
        throw ParseError("unknown name '" + id + "'", lx_.pos);
    }
};

}  // namespace

ValuedElement parse_element(const std::string& text, const ValuedFieldContext& ctx) {
    return ElementParser(text, ctx).parse();
}

GammaValue parse_gamma(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "inf" || t == "INFINITY") return GammaValue::infinity();
    return GammaValue(parse_rational(t));
}

mpq_class parse_rational(const std::string& text) {
    Lexer lx{text};
    mpz_class n = lx.integer();
    mpz_class d = 1;
    if (lx.accept('/')) d = lx.integer();
    if (!lx.eof()) throw ParseError("trailing input in rational", lx.pos);
    if (d == 0) throw ParseError("zero denominator", lx.pos);
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string context_fields(const ValuedFieldContext& ctx) {
    std::ostringstream os;
    if (ctx.backend() == Backend::PadicRationals) {
        os << "backend=padic,p=" << ctx.prime() << ",N=1";
    } else {
        os << "backend=laurent,k=" << ctx.coefficient_field().str()
           << ",N=" << ctx.ramification() << ",prec=" << ctx.precision_steps();
    }
    return os.str();
}

CoefficientField parse_field_spec(const std::string& spec, std::size_t errpos) {
    std::string s = trim(spec);
    std::vector<std::string> syms;
    std::size_t par = s.find('(');
    if (par != std::string::npos) {
        if (s.back() != ')') throw ParseError("malformed field spec", errpos);
        for (const std::string& part :
             split_top_level(s.substr(par + 1, s.size() - par - 2), ','))
            syms.push_back(trim(part));
        s = s.substr(0, par);
    }
    CoefficientField base;
    if (s == "Q")
        base = CoefficientField::rationals();
    else if (s.size() > 1 && s[0] == 'F')
        base = CoefficientField::prime_field(std::stoul(s.substr(1)));
    else
        throw ParseError("unknown coefficient field '" + s + "'", errpos);
    if (!syms.empty()) base = base.with_transcendentals(syms);
    return base;
}

std::map<std::string, std::string> record_fields(const std::string& text) {
    std::string s = trim(text);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    std::map<std::string, std::string> out;
    for (const std::string& part : split_top_level(s, ',')) {
        std::string p = trim(part);
        if (p.empty()) continue;
        std::size_t eq = p.find('=');
        if (eq == std::string::npos) throw ParseError("record field without '='", 0);
        out[trim(p.substr(0, eq))] = trim(p.substr(eq + 1));
    }
    return out;
}

}  // namespace

std::string curve_record(const ShortWeierstrass& c) {
    std::ostringstream os;
    os << "{" << context_fields(c.context()) << ",form=short,A=" << c.A().str()
       << ",B=" << c.B().str() << "}";
    return os.str();
}

std::string curve_record(const GeneralWeierstrass& c) {
    std::ostringstream os;
    os << "{" << context_fields(c.context()) << ",form=general,a1=" << c.a1().str()
       << ",a2=" << c.a2().str() << ",a3=" << c.a3().str() << ",a4=" << c.a4().str()
       << ",a6=" << c.a6().str() << "}";
    return os.str();
}

std::string curve_record(const AnyCurve& c) {
    if (std::holds_alternative<ShortWeierstrass>(c))
        return curve_record(std::get<ShortWeierstrass>(c));
    return curve_record(std::get<GeneralWeierstrass>(c));
}

const ValuedFieldContext& curve_context(const AnyCurve& c) {
    if (std::holds_alternative<ShortWeierstrass>(c))
        return std::get<ShortWeierstrass>(c).context();
    return std::get<GeneralWeierstrass>(c).context();
}

AnyCurve parse_curve_record(const std::string& text) {
    auto f = record_fields(text);
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = f.find(key);
        if (it == f.end()) throw ParseError("curve record missing '" + key + "'", 0);
        return it->second;
    };
    ValuedFieldContext ctx;
    const std::string backend = need("backend");
    if (backend == "padic") {
        ctx = ValuedFieldContext::padic(std::stoul(need("p")));
    } else if (backend == "laurent") {
        long prec = f.count("prec") ? std::stol(f.at("prec")) : 40;
        long N = f.count("N") ? std::stol(f.at("N")) : 1;
        ctx = ValuedFieldContext::laurent(parse_field_spec(need("k"), 0), prec);
        if (N != 1) ctx = ctx.ramified(N);
    } else {
        throw ParseError("unknown backend '" + backend + "'", 0);
    }
    const std::string form = f.count("form") ? f.at("form") : "short";
    if (form == "short")
        return ShortWeierstrass(parse_element(need("A"), ctx),
                                parse_element(need("B"), ctx));
    if (form == "general")
        return GeneralWeierstrass(parse_element(need("a1"), ctx),
                                  parse_element(need("a2"), ctx),
                                  parse_element(need("a3"), ctx),
                                  parse_element(need("a4"), ctx),
                                  parse_element(need("a6"), ctx));
    throw ParseError("unknown curve form '" + form + "'", 0);
}

std::string point_record(const CurvePoint& p) {
    if (p.is_infinity()) return "inf";
    return "(" + p.x().str() + "," + p.y().str() + ")";
}

CurvePoint parse_point_record(const std::string& text, const ValuedFieldContext& ctx) {
    std::string s = trim(text);
    if (s == "inf" || s == "INFINITY") return CurvePoint::infinity();
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("point must be 'inf' or '(x,y)'", 0);
    auto parts = split_top_level(s.substr(1, s.size() - 2), ',');
    if (parts.size() != 2) throw ParseError("point must have two coordinates", 0);
    return CurvePoint::affine(parse_element(parts[0], ctx), parse_element(parts[1], ctx));
}

std::string poly_terms_record(const CanonicalPoly& g) {
    std::ostringstream os;
    for (const auto& [m, c] : g.terms()) {
        os << "e=";
        for (std::size_t i = 0; i < m.xe.size(); ++i) os << (i ? "," : "") << m.xe[i];
        os << " f=";
        for (std::size_t i = 0; i < m.ye.size(); ++i)
            os << (i ? "," : "") << unsigned(m.ye[i]);
        os << " c=" << c.str() << "\n";
    }
    return os.str();
}

CanonicalPoly parse_poly_terms(const std::string& text, std::size_t arity,
                               const ValuedFieldContext& ctx) {
    CanonicalPoly out(arity);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string fe, ff, fc;
        ls >> fe >> ff;
        std::getline(ls, fc);
        fc = trim(fc);
        if (fe.rfind("e=", 0) != 0 || ff.rfind("f=", 0) != 0 || fc.rfind("c=", 0) != 0)
            throw ParseError("term line must look like 'e=.. f=.. c=..'", 0);
        Monomial m = Monomial::unit(arity);
        auto evec = split_top_level(fe.substr(2), ',');
        auto fvec = split_top_level(ff.substr(2), ',');
        if (evec.size() != arity || fvec.size() != arity)
            throw ParseError("term arity mismatch", 0);
        for (std::size_t i = 0; i < arity; ++i) {
            m.xe[i] = static_cast<unsigned>(std::stoul(trim(evec[i])));
            unsigned f = static_cast<unsigned>(std::stoul(trim(fvec[i])));
            if (f > 1) throw ParseError("canonical term with y-exponent above 1", 0);
            m.ye[i] = static_cast<unsigned char>(f);
        }
        out.add_term(m, parse_element(fc.substr(2), ctx));
    }
    return out;
}

bool Config::has(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return true;
    return false;
}

std::string Config::get(const std::string& key, const std::string& fallback) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    return fallback;
}

std::vector<std::string> Config::get_all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries)
        if (k == key) out.push_back(v);
    return out;
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + " has no '='",
                             lineno);
        cfg.entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

}  // namespace valcurve
