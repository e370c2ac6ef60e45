#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace pointmod {

/// The ground field: exact rationals, or a prime field F_p.
struct Field {
    enum class Kind { Rational, Prime };

    Kind kind = Kind::Rational;
    std::uint64_t p = 0;  // meaningful for Kind::Prime only

    static Field rational() { return {}; }
    /// Throws Error{InvalidArgument} if p is not a prime below 2^31.
    static Field prime(std::uint64_t p);

    bool is_prime() const noexcept { return kind == Kind::Prime; }
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;
};

class FieldElement {
public:
    /// Zero of Q.
    FieldElement() = default;
    FieldElement(const Field& field, long value);
    FieldElement(const Field& field, const mpq_class& value);

    /// Parses an integer or an "a/b" string in the given field.
    static FieldElement parse(const Field& field, std::string_view text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; for prime fields, the canonical residue in [0, p).
    mpq_class to_rational() const;
    std::uint64_t residue() const;

    FieldElement operator-() const;
    FieldElement inverse() const;  // throws Error{DivisionByZero}
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    /// Total order used only to canonicalise unordered parameter sets:
    /// rationals by value, residues by representative in [0, p).
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t p;
        friend bool operator==(const Residue&, const Residue&) = default;
    };

    explicit FieldElement(Residue r) : value_(r) {}
    void check_same_field(const FieldElement& rhs) const;

    std::variant<mpq_class, Residue> value_;
};

/// Square root in the field when one exists. Rationals: exact square test;
/// prime fields: exhaustive search (fields used here are small).
bool field_sqrt(const FieldElement& a, FieldElement& root);

}  // namespace pointmod
