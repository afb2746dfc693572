#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qsums {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in one formal variable q with arbitrary-precision
/// integer coefficients.
///
/// Dense representation: coeffs()[i] holds the coefficient of
/// q^(min_exp() + i). Canonical form invariants:
///   - if coeffs() is nonempty, its first and last entries are nonzero;
///   - the zero polynomial is exactly (min_exp = 0, coeffs = {}).
/// Values are immutable after construction; every operation returns a new
/// value, so polynomials can be shared freely between threads.
///
/// Multiplication is schoolbook, O(d1*d2) coefficient products.
class LaurentPoly {
public:
    /// The zero polynomial.
    LaurentPoly() = default;

    /// Builds from an exponent offset and dense coefficient run; trims
    /// leading/trailing zeros to restore canonical form.
    LaurentPoly(long min_exp, std::vector<BigInt> coeffs);

    /// c * q^e. c = 0 yields the zero polynomial.
    static LaurentPoly monomial(BigInt c, long e);

    /// Constant polynomial.
    static LaurentPoly constant(BigInt c) { return monomial(std::move(c), 0); }

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return min_exp_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    std::size_t term_count() const;

    /// Highest exponent with nonzero coefficient. Usage error on zero.
    long degree() const;
    /// Lowest exponent with nonzero coefficient. Usage error on zero.
    long low_exp() const;

    /// Coefficient of q^e (zero outside the stored range).
    const BigInt& coeff(long e) const;

    /// True iff no negative exponent occurs (the zero polynomial counts).
    bool is_polynomial() const { return coeffs_.empty() || min_exp_ >= 0; }
    /// True iff every coefficient is >= 0.
    bool has_nonneg_coeffs() const;

    /// Sum of all coefficients, i.e. the value at q = 1.
    BigInt eval_at_one() const;

    /// Coefficient reversal q -> q^-1; an involution and ring homomorphism.
    LaurentPoly subst_q_inverse() const;

    /// Multiplication by q^e.
    LaurentPoly shifted(long e) const;

    /// k-th power, k >= 0 (binary exponentiation). Negative k is a usage error.
    LaurentPoly pow(long k) const;

    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    /// Canonical-form uniqueness makes memberwise equality value equality.
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Text rendering, terms in increasing exponent: "q^-1 + 2 + 3*q^2".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

private:
    void canonicalize();

    long min_exp_ = 0;
    std::vector<BigInt> coeffs_;
};

/// Why an exact division did not produce an integer Laurent quotient.
/// This is a verdict value, not an error: the verification harness records
/// it as the witness of a failed divisibility claim.
struct DivisionFailure {
    enum class Kind {
        NonzeroRemainder,  ///< long division ended with a nonzero remainder
        NonIntegerStep,    ///< a quotient coefficient would not be an integer
    };

    Kind kind = Kind::NonzeroRemainder;
    /// Remainder state at the point of failure (exponents in the numerator's
    /// frame), nonzero by construction.
    LaurentPoly remainder;

    std::string describe() const;
};

/// Result of exact division in the ring of integer Laurent polynomials:
/// either the quotient Q with num = den * Q, or the failure witness.
class ExactDivision {
public:
    static ExactDivision success(LaurentPoly q) { return ExactDivision(std::move(q)); }
    static ExactDivision fail(DivisionFailure f) { return ExactDivision(std::move(f)); }

    bool ok() const { return std::holds_alternative<LaurentPoly>(value_); }
    const LaurentPoly& quotient() const { return std::get<LaurentPoly>(value_); }
    const DivisionFailure& failure() const { return std::get<DivisionFailure>(value_); }

private:
    explicit ExactDivision(LaurentPoly q) : value_(std::move(q)) {}
    explicit ExactDivision(DivisionFailure f) : value_(std::move(f)) {}

    std::variant<LaurentPoly, DivisionFailure> value_;
};

/// Long division from the highest exponent, after normalizing the exponent
/// offsets of both operands, so the quotient is found whenever num/den is an
/// integer Laurent polynomial. den = 0 is a usage error (throws).
ExactDivision exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// exact_div that must succeed by construction; throws std::logic_error with
/// `context` if it does not (used where divisibility is a proved fact, so a
/// failure indicates a kernel bug rather than a verdict).
LaurentPoly exact_div_checked(const LaurentPoly& num, const LaurentPoly& den,
                              const char* context);

}  // namespace qsums
