#pragma once

#include <gmpxx.h>

#include <vector>

namespace pointmod {

/// Power series in q over Q, truncated after q^order.
class QSeries {
public:
    explicit QSeries(int order);
    QSeries(int order, std::vector<mpq_class> coefficients);
    static QSeries one(int order);

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    mpq_class& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<mpq_class>& coefficients() const noexcept { return c_; }

    /// Multiplies by q^k (dropping what falls past the order).
    QSeries shifted(int k) const;
    /// Throws Error{DivisionByZero} if the constant term vanishes.
    QSeries inverse() const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const mpq_class& s);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<mpq_class> c_;
};

/// 1 / prod_{i=1}^{n} (1 - q^i)
QSeries q_pochhammer_inverse(int n, int q_order);

/// Series in t and q over Q: coefficient(i, j) is the t^i q^j term.
class BivariateSeries {
public:
    BivariateSeries(int t_order, int q_order);

    int t_order() const noexcept { return static_cast<int>(slices_.size()) - 1; }
    int q_order() const noexcept { return q_order_; }
    const QSeries& slice(int i) const { return slices_.at(static_cast<std::size_t>(i)); }
    QSeries& slice(int i) { return slices_.at(static_cast<std::size_t>(i)); }
    const mpq_class& coefficient(int i, int j) const { return slice(i)[j]; }

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    /// Throws Error{DivisionByZero} unless the t^0 slice has constant term nonzero.
    friend BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b);
    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

    bool is_integral() const;

private:
    int q_order_;
    std::vector<QSeries> slices_;
};

struct ParallelogramParts {
    BivariateSeries numerator;
    BivariateSeries denominator;
    BivariateSeries quotient;
};

/// Numerator, denominator and quotient of the area/column generating function
/// of parallelogram polyominoes (t marks columns, q marks area). The sums are
/// cut at n = t_order since later terms carry higher powers of t.
/// Throws std::logic_error if the quotient has a non-integer coefficient.
ParallelogramParts parallelogram_gf_parts(int t_order, int q_order);
/// 1 + numerator/denominator: the constant term counts the empty polyomino, so
/// the t^c q^a coefficient is the number of polyominoes of area a with c columns for all a >= 0.
BivariateSeries parallelogram_gf(int t_order, int q_order);

/// Sets t = 1. Exact only when t_order >= q_order (a polyomino of area a has at
/// most a columns); throws Error{InvalidArgument} otherwise.
QSeries specialize_t_one(const BivariateSeries& s);

}  // namespace pointmod
