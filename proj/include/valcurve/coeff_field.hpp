#ifndef VALCURVE_COEFF_FIELD_HPP
#define VALCURVE_COEFF_FIELD_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valcurve/errors.hpp"

namespace valcurve {

class FieldElem;

enum class FieldBase { Rationals, PrimeField };

namespace detail {

struct FieldDesc {
    FieldBase base = FieldBase::Rationals;
    unsigned long p = 0;  // prime when base == PrimeField
    std::vector<std::string> symbols;

    bool operator==(const FieldDesc& o) const {
        return base == o.base && p == o.p && symbols == o.symbols;
    }
};

using Expo = std::vector<unsigned>;

// Sparse multivariate polynomial over the scalar domain of a FieldDesc.
// Scalars are mpq_class values; prime fields keep the canonical integer
// representative in [0, p).
struct MPoly {
    std::map<Expo, mpq_class> t;

    bool is_zero() const { return t.empty(); }
};

struct MPolyFrac {
    MPoly num;
    MPoly den;  // canonical: monic in graded-lex, gcd(num, den) = 1
};

}  // namespace detail

// Descriptor of an exact coefficient field: Q, F_p, or a rational function
// field over one of those in a list of transcendental symbols. Towers are
// flattened: adjoining symbols to Q(A,B) appends to the symbol list.
class CoefficientField {
public:
    CoefficientField() = default;

    static CoefficientField rationals();
    static CoefficientField prime_field(unsigned long p);

    CoefficientField with_transcendentals(const std::vector<std::string>& names) const;

    bool valid() const { return d_ != nullptr; }
    bool is_function_field() const { return d_ && !d_->symbols.empty(); }
    FieldBase base() const { return d_->base; }
    unsigned long characteristic() const {
        return d_->base == FieldBase::PrimeField ? d_->p : 0;
    }
    unsigned long prime() const { return d_->p; }
    const std::vector<std::string>& symbols() const { return d_->symbols; }
    std::optional<std::size_t> symbol_index(const std::string& name) const;

    bool operator==(const CoefficientField& o) const;
    bool operator!=(const CoefficientField& o) const { return !(*this == o); }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_integer(long v) const;
    FieldElem from_rational(const mpq_class& v) const;
    FieldElem symbol(const std::string& name) const;

    std::string str() const;  // "Q", "F5", "Q(A,B)", ...

    const detail::FieldDesc& desc() const { return *d_; }

private:
    explicit CoefficientField(detail::FieldDesc d)
        : d_(std::make_shared<const detail::FieldDesc>(std::move(d))) {}

    std::shared_ptr<const detail::FieldDesc> d_;

    friend class FieldElem;
};

// Immutable element of a CoefficientField. Scalar values are stored
// directly; function-field values are reduced fractions shared by pointer.
class FieldElem {
public:
    FieldElem() = default;

    const CoefficientField& field() const { return f_; }
    bool valid() const { return f_.valid(); }

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem inverse() const;
    FieldElem pow(unsigned long e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Canonical square root: least nonnegative representative in prime
    // fields, the positive root over Q, leading-coefficient-canonical in
    // function fields. nullopt when the element is not a square.
    std::optional<FieldElem> sqrt() const;

    // True when the (reduced) value involves no transcendental symbol.
    bool is_base_constant() const;
    // The scalar value of a base constant.
    mpq_class base_value() const;

    std::string str() const;

private:
    CoefficientField f_;
    mpq_class q_;
    std::shared_ptr<const detail::MPolyFrac> fr_;

    FieldElem(CoefficientField f, mpq_class q) : f_(std::move(f)), q_(std::move(q)) {}
    FieldElem(CoefficientField f, detail::MPolyFrac fr)
        : f_(std::move(f)), fr_(std::make_shared<const detail::MPolyFrac>(std::move(fr))) {}

    friend class CoefficientField;
};

namespace detail {
// Exposed for tests: multivariate gcd (monic in graded-lex) and exact division.
MPoly mpoly_gcd(const FieldDesc& k, const MPoly& a, const MPoly& b);
MPoly mpoly_div_exact(const FieldDesc& k, const MPoly& a, const MPoly& b);
MPoly mpoly_mul(const FieldDesc& k, const MPoly& a, const MPoly& b);
MPoly mpoly_add(const FieldDesc& k, const MPoly& a, const MPoly& b);
}  // namespace detail

}  // namespace valcurve

#endif
