#ifndef VALCURVE_ELEMENT_HPP
#define VALCURVE_ELEMENT_HPP

#include <gmpxx.h>

#include <limits>
#include <map>
#include <memory>
#include <string>

#include "valcurve/coeff_field.hpp"
#include "valcurve/errors.hpp"
#include "valcurve/gamma.hpp"

namespace valcurve {

enum class Backend { PadicRationals, Laurent };

class ValuedElement;

namespace detail {

struct ContextDesc {
    Backend backend = Backend::Laurent;
    unsigned long p = 0;       // prime for the p-adic backend
    CoefficientField k;        // Laurent coefficient field
    long ram = 1;              // ramification index N; value group (1/N)Z
    long prec_steps = 40;      // Laurent precision budget, in uniformizer steps

    bool operator==(const ContextDesc& o) const {
        return backend == o.backend && p == o.p && k == o.k && ram == o.ram &&
               prec_steps == o.prec_steps;
    }
};

}  // namespace detail

// Immutable descriptor of an exact valued-field backend. PadicRationals
// holds exact rationals with the p-adic valuation; Laurent holds truncated
// series over an exact coefficient field, with value group (1/N)Z.
class ValuedFieldContext {
public:
    ValuedFieldContext() = default;

    static ValuedFieldContext padic(unsigned long p);
    static ValuedFieldContext laurent(CoefficientField k, long prec_steps = 40);

    // Value-group refinement to (1/(N*M))Z; existing elements embed with
    // unchanged valuations and pi_new^M = pi_old.
    ValuedFieldContext ramified(long M) const;

    bool valid() const { return d_ != nullptr; }
    Backend backend() const { return d_->backend; }
    unsigned long prime() const { return d_->p; }
    const CoefficientField& coefficient_field() const { return d_->k; }
    long ramification() const { return d_->ram; }
    long precision_steps() const { return d_->prec_steps; }

    CoefficientField residue_field() const;
    unsigned long residue_characteristic() const;

    bool operator==(const ValuedFieldContext& o) const;
    bool operator!=(const ValuedFieldContext& o) const { return !(*this == o); }

    ValuedElement zero() const;
    ValuedElement one() const;
    ValuedElement from_integer(long v) const;
    ValuedElement from_rational(const mpq_class& v) const;
    // Constant with the given residue-field / coefficient-field value.
    ValuedElement from_coefficient(const FieldElem& c) const;
    ValuedElement uniformizer_pow(long steps) const;
    ValuedElement monomial(long steps, const FieldElem& c) const;

    std::string str() const;

    const detail::ContextDesc& desc() const { return *d_; }

private:
    explicit ValuedFieldContext(detail::ContextDesc d)
        : d_(std::make_shared<const detail::ContextDesc>(std::move(d))) {}

    std::shared_ptr<const detail::ContextDesc> d_;

    friend class ValuedElement;
};

// Element of a valued-field backend. P-adic elements are exact rationals;
// Laurent elements are finite exponent->coefficient maps plus a precision
// bound (kExact when the series is exact).
class ValuedElement {
public:
    static constexpr long kExact = std::numeric_limits<long>::max();

    ValuedElement() = default;

    const ValuedFieldContext& context() const { return ctx_; }
    bool valid() const { return ctx_.valid(); }

    // Valuation; INFINITY when no terms survive (zero up to precision).
    GammaValue val() const;
    // As val(), but refuses to call a truncated element zero.
    GammaValue val_checked() const;

    bool is_exact() const;
    bool is_exact_zero() const;
    // Indistinguishable from zero at the available precision.
    bool is_zero() const;
    long precision_steps() const { return prec_; }

    ValuedElement operator-() const;
    friend ValuedElement operator+(const ValuedElement& a, const ValuedElement& b);
    friend ValuedElement operator-(const ValuedElement& a, const ValuedElement& b);
    friend ValuedElement operator*(const ValuedElement& a, const ValuedElement& b);
    friend ValuedElement operator/(const ValuedElement& a, const ValuedElement& b);
    ValuedElement inverse() const;
    ValuedElement pow(long e) const;

    // Equality to the available precision (exact for p-adic rationals).
    bool operator==(const ValuedElement& o) const;
    bool operator!=(const ValuedElement& o) const { return !(*this == o); }

    // Image in the residue field; requires val >= 0.
    FieldElem residue() const;
    // res(x / pi^delta) for a rational shift delta, computed on exponents —
    // no ramified context is materialized even when delta is outside the
    // value lattice.
    FieldElem residue_shift(const GammaValue& delta) const;

    ValuedElement hensel_sqrt() const;

    ValuedElement embed(const ValuedFieldContext& finer) const;

    const mpq_class& rational_value() const;

    std::string str() const;

private:
    ValuedFieldContext ctx_;
    mpq_class rat_;                  // p-adic payload
    std::map<long, FieldElem> ts_;   // Laurent payload: step -> nonzero coeff
    long prec_ = kExact;

    bool laurent() const { return ctx_.backend() == Backend::Laurent; }
    void trim();
    ValuedElement shifted(long steps) const;  // multiply by pi^steps
    // Known lower bound for the valuation in steps (kExact for exact zero).
    long val_floor_steps() const;

    friend class ValuedFieldContext;
    friend ValuedElement laurent_unit_inverse(const ValuedElement& u, long rel_prec);
};

}  // namespace valcurve

#endif
