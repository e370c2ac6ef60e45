#include "pointmod/motive.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "pointmod/error.hpp"

namespace pointmod {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
    if (degree < 0) throw std::invalid_argument("IntPolynomial::monomial: negative degree");
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::size_t IntPolynomial::term_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) != 0; }));
}

const mpz_class& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

mpz_class IntPolynomial::coefficient(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(degree)];
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (sgn(leading()) < 0) g = -g;
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

mpq_class IntPolynomial::evaluate(const mpq_class& at) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& scalar) {
    if (sgn(scalar) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(out));
}

bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

std::string IntPolynomial::to_string(std::string_view symbol) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(d)];
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        mpz_class a = abs(c);
        if (d == 0 || a != 1) out += a.get_str();
        if (d >= 1) out += symbol;
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by zero");
    IntPolynomial r = a;
    const int db = b.degree();
    const mpz_class lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        IntPolynomial shifted = IntPolynomial::monomial(r.leading(), r.degree() - db) * b;
        r *= lb;
        r -= shifted;
    }
    return r;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_quotient by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("exact_quotient: not divisible");
    std::vector<mpz_class> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto bc = b.coefficients();
    const mpz_class& lb = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        mpz_class& top = rem[static_cast<std::size_t>(k + b.degree())];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::logic_error("exact_quotient: not divisible");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < bc.size(); ++j) {
            mpz_submul(rem[static_cast<std::size_t>(k) + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
        }
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const auto& c : rem) {
        if (sgn(c) != 0) throw std::logic_error("exact_quotient: not divisible");
    }
    return IntPolynomial(std::move(quot));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree() == 0) return IntPolynomial{1};
        IntPolynomial r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u.primitive_part();
}

// ---------------------------------------------------------------------------

Motive::Motive() : num_(), den_{1} {}

Motive::Motive(long value) : num_{value}, den_{1} {}

Motive::Motive(const mpz_class& value) : num_(IntPolynomial::constant(value)), den_{1} {}

Motive::Motive(IntPolynomial polynomial) : num_(std::move(polynomial)), den_{1} {}

Motive::Motive(IntPolynomial num, IntPolynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}

Motive Motive::normalize(IntPolynomial num, IntPolynomial den) {
    if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "motive with zero denominator");
    if (num.is_zero()) return Motive();
    IntPolynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_quotient(num, g);
        den = exact_quotient(den, g);
    }
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
    if (sgn(den.leading()) < 0) c = -c;
    if (c != 1) {
        IntPolynomial n2, d2;
        std::vector<mpz_class> nc(num.coefficients().begin(), num.coefficients().end());
        std::vector<mpz_class> dc(den.coefficients().begin(), den.coefficients().end());
        for (auto& x : nc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        for (auto& x : dc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        num = IntPolynomial(std::move(nc));
        den = IntPolynomial(std::move(dc));
    }
    return Motive(std::move(num), std::move(den), 0);
}

Motive Motive::L() { return Motive(IntPolynomial{0, 1}); }

Motive Motive::L_power(int k) {
    if (k >= 0) return Motive(IntPolynomial::monomial(1, k));
    return Motive(IntPolynomial{1}, IntPolynomial::monomial(1, -k), 0);
}

int Motive::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero motive");
    return num_.degree() - den_.degree();
}

Motive Motive::operator-() const { return Motive(-num_, den_, 0); }

Motive& Motive::operator+=(const Motive& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        *this = normalize(num_ + rhs.num_, den_);
        return *this;
    }
    // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator.
    IntPolynomial g = gcd(den_, rhs.den_);
    IntPolynomial b1 = exact_quotient(den_, g);
    IntPolynomial d1 = exact_quotient(rhs.den_, g);
    IntPolynomial num = num_ * d1 + rhs.num_ * b1;
    IntPolynomial den = b1 * rhs.den_;
    *this = normalize(std::move(num), std::move(den));
    return *this;
}

Motive& Motive::operator-=(const Motive& rhs) { return *this += -rhs; }

Motive& Motive::operator*=(const Motive& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = Motive();
    if (is_polynomial() && rhs.is_polynomial()) {
        IntPolynomial p = num_ * rhs.num_;
        return *this = Motive(std::move(p));
    }
    // Cancel across before multiplying to keep the gcd in normalize small.
    IntPolynomial g1 = gcd(num_, rhs.den_);
    IntPolynomial g2 = gcd(rhs.num_, den_);
    IntPolynomial num = exact_quotient(num_, g1) * exact_quotient(rhs.num_, g2);
    IntPolynomial den = exact_quotient(den_, g2) * exact_quotient(rhs.den_, g1);
    *this = normalize(std::move(num), std::move(den));
    return *this;
}

Motive& Motive::operator/=(const Motive& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero motive");
    return *this *= normalize(rhs.den_, rhs.num_);
}

Motive Motive::pow(int exponent) const {
    if (exponent < 0) return Motive(1) / pow(-exponent);
    Motive result(1);
    Motive base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

mpq_class Motive::specialize(const mpq_class& q) const {
    mpq_class d = den_.evaluate(q);
    if (sgn(d) == 0) throw Error(ErrorCode::PoleAtPoint, "motive " + to_string() + " has a pole at L = " + q.get_str());
    mpq_class out = num_.evaluate(q) / d;
    out.canonicalize();
    return out;
}

namespace {

bool needs_parens(const IntPolynomial& p) { return p.term_count() > 1; }

bool denominator_needs_parens(const IntPolynomial& p) {
    if (p.term_count() > 1) return true;
    // A lone c*L^k with c != 1 would read as (1/c)*L^k.
    return p.degree() > 0 && p.leading() != 1;
}

}  // namespace

std::string Motive::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    if (needs_parens(num_)) n = "(" + n + ")";
    if (denominator_needs_parens(den_)) d = "(" + d + ")";
    return n + "/" + d;
}

// Recursive-descent parser over the grammar
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/')? unary)*        juxtaposition multiplies
//   unary := ('+'|'-') unary | power
//   power := atom ('^' '-'? digits)?
//   atom  := digits | 'L' | '(' expr ')'
namespace {

class MotiveParser {
public:
    explicit MotiveParser(std::string_view text) : text_(text) {}

    Motive parse_all() {
        Motive m = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return m;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError,
                    "cannot parse motive '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_atom(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == 'L' || c == '('; }

    Motive expr() {
        Motive acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Motive term() {
        Motive acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= unary();
            } else if (c == '/') {
                ++pos_;
                Motive d = unary();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else if (starts_atom(c)) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    Motive unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Motive power() {
        Motive base = atom();
        if (peek() == '^') {
            ++pos_;
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            std::string digits = read_digits();
            if (digits.empty()) fail("expected exponent");
            if (digits.size() > 6) fail("exponent too large");
            int e = std::stoi(digits);
            if (negative && base.is_zero()) fail("division by zero");
            base = base.pow(negative ? -e : e);
        }
        return base;
    }

    Motive atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Motive inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'L') {
            ++pos_;
            return Motive::L();
        }
        std::string digits = read_digits();
        if (digits.empty()) fail("expected a number, 'L' or '('");
        return Motive(mpz_class(digits));
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Motive Motive::parse(std::string_view text) { return MotiveParser(text).parse_all(); }

Motive gl_class(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "gl_class: n must be positive");
    IntPolynomial acc{1};
    for (int i = 0; i < n; ++i) acc = acc * (IntPolynomial::monomial(1, n) - IntPolynomial::monomial(1, i));
    return Motive(std::move(acc));
}

}  // namespace pointmod
