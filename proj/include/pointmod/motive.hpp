#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pointmod {

/// Dense polynomial in the Lefschetz symbol L with arbitrary-precision integer
/// coefficients, lowest degree first. The zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial constant(const mpz_class& c);
    static IntPolynomial monomial(const mpz_class& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t term_count() const noexcept;
    const mpz_class& leading() const;
    std::span<const mpz_class> coefficients() const noexcept { return coeffs_; }
    mpz_class coefficient(int degree) const;

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    mpz_class content() const;
    /// Content removed and sign chosen so that the leading coefficient is positive.
    IntPolynomial primitive_part() const;

    mpq_class evaluate(const mpq_class& at) const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const mpz_class& scalar);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator*(IntPolynomial lhs, const mpz_class& rhs) { return lhs *= rhs; }
    friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs);

    std::string to_string(std::string_view symbol = "L") const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a reduced modulo b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient of a by b when b divides a in Z[L]; throws std::logic_error otherwise.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Element of Q(L): the coefficient ring of every motivic class in this library.
///
/// Values are always stored in canonical form: numerator and denominator are
/// coprime over Q, their coefficients jointly have content 1, and the
/// denominator has a positive leading coefficient. Structural equality is
/// therefore equality of rational functions.
class Motive {
public:
    Motive();
    Motive(long value);  // NOLINT(google-explicit-constructor)
    explicit Motive(const mpz_class& value);
    explicit Motive(IntPolynomial polynomial);

    /// Throws Error{ZeroDenominator} when den is zero.
    static Motive normalize(IntPolynomial num, IntPolynomial den);
    static Motive L();
    /// L^k for any integer k; negative powers become fractions.
    static Motive L_power(int k);
    /// Accepts sums, products, quotients and integer powers of L and integers,
    /// including everything produced by to_string().
    static Motive parse(std::string_view text);

    const IntPolynomial& numerator() const noexcept { return num_; }
    const IntPolynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0 && den_.leading() == 1; }
    /// deg(numerator) - deg(denominator); the zero motive has no degree and throws.
    int degree() const;

    Motive operator-() const;
    Motive& operator+=(const Motive& rhs);
    Motive& operator-=(const Motive& rhs);
    Motive& operator*=(const Motive& rhs);
    Motive& operator/=(const Motive& rhs);
    friend Motive operator+(Motive lhs, const Motive& rhs) { return lhs += rhs; }
    friend Motive operator-(Motive lhs, const Motive& rhs) { return lhs -= rhs; }
    friend Motive operator*(Motive lhs, const Motive& rhs) { return lhs *= rhs; }
    friend Motive operator/(Motive lhs, const Motive& rhs) { return lhs /= rhs; }
    friend bool operator==(const Motive& lhs, const Motive& rhs) = default;

    Motive pow(int exponent) const;

    /// Exact evaluation at L = q. Throws Error{PoleAtPoint}.
    mpq_class specialize(const mpq_class& q) const;

    std::string to_string() const;

private:
    Motive(IntPolynomial num, IntPolynomial den, int /*already canonical*/);

    IntPolynomial num_;
    IntPolynomial den_;
};

/// [GL_n] = prod_{i=0}^{n-1} (L^n - L^i).
Motive gl_class(int n);

}  // namespace pointmod
