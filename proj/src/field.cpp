#include "pointmod/field.hpp"

#include <cctype>

#include "pointmod/error.hpp"

namespace pointmod {

namespace {

bool is_prime_number(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 31) || !is_prime_number(p)) {
        throw Error(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) + " is not a supported prime");
    }
    return Field{Kind::Prime, p};
}

std::string Field::to_string() const { return is_prime() ? "F_" + std::to_string(p) : "Q"; }

FieldElement::FieldElement(const Field& field, long value) : FieldElement(field, mpq_class(value)) {}

FieldElement::FieldElement(const Field& field, const mpq_class& value) {
    if (!field.is_prime()) {
        mpq_class v = value;
        v.canonicalize();
        value_ = v;
        return;
    }
    std::uint64_t num = reduce(value.get_num(), field.p);
    std::uint64_t den = reduce(value.get_den(), field.p);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + field.to_string());
    value_ = Residue{num * mod_pow(den, field.p - 2, field.p) % field.p, field.p};
}

FieldElement FieldElement::parse(const Field& field, std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    mpq_class q;
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            q = mpq_class(mpz_class(s));
        } else {
            mpz_class n(s.substr(0, slash));
            mpz_class d(s.substr(slash + 1));
            if (sgn(d) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
            q = mpq_class(n, d);
            q.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::ParseError, "not a field element: '" + std::string(text) + "'");
    }
    return FieldElement(field, q);
}

Field FieldElement::field() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return Field{Field::Kind::Prime, r->p};
    return Field::rational();
}

bool FieldElement::is_zero() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->p;
    return std::get<mpq_class>(value_) == 1;
}

mpq_class FieldElement::to_rational() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return mpq_class(static_cast<unsigned long>(r->value));
    return std::get<mpq_class>(value_);
}

std::uint64_t FieldElement::residue() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
    throw std::logic_error("residue() on a rational field element");
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (value_.index() != rhs.value_.index() ||
        (value_.index() == 1 && std::get<Residue>(value_).p != std::get<Residue>(rhs.value_).p)) {
        throw Error(ErrorCode::FieldMismatch, "arithmetic between " + field().to_string() + " and " +
                                                  rhs.field().to_string());
    }
}

FieldElement FieldElement::operator-() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return FieldElement(Residue{(r->p - r->value) % r->p, r->p});
    FieldElement out;
    out.value_ = mpq_class(-std::get<mpq_class>(value_));
    return out;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (const auto* r = std::get_if<Residue>(&value_)) return FieldElement(Residue{mod_pow(r->value, r->p - 2, r->p), r->p});
    FieldElement out;
    out.value_ = mpq_class(1 / std::get<mpq_class>(value_));
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        r->value = (r->value + std::get<Residue>(rhs.value_).value) % r->p;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        r->value = r->value * std::get<Residue>(rhs.value_).value % r->p;
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    a.check_same_field(b);
    if (const auto* r = std::get_if<FieldElement::Residue>(&a.value_)) {
        return r->value <=> std::get<FieldElement::Residue>(b.value_).value;
    }
    int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string FieldElement::to_string() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

bool field_sqrt(const FieldElement& a, FieldElement& root) {
    Field f = a.field();
    if (f.is_prime()) {
        for (std::uint64_t v = 0; v < f.p; ++v) {
            FieldElement c(f, static_cast<long>(v));
            if (c * c == a) {
                root = c;
                return true;
            }
        }
        return false;
    }
    mpq_class q = a.to_rational();
    if (sgn(q) < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = FieldElement(f, mpq_class(rn, rd));
    return true;
}

}  // namespace pointmod
