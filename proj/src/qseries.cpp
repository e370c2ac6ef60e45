#include "pointmod/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "pointmod/error.hpp"

namespace pointmod {

namespace {

void require_order(int order) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be non-negative");
}

}  // namespace

QSeries::QSeries(int order) : c_(static_cast<std::size_t>(std::max(order, 0)) + 1) { require_order(order); }

QSeries::QSeries(int order, std::vector<mpq_class> coefficients) : c_(std::move(coefficients)) {
    require_order(order);
    c_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s[0] = 1;
    return s;
}

QSeries QSeries::shifted(int k) const {
    QSeries out(order());
    for (int i = 0; i + k <= order(); ++i) {
        if (i + k >= 0) out[i + k] = c_[static_cast<std::size_t>(i)];
    }
    return out;
}

QSeries QSeries::inverse() const {
    if (c_[0] == 0) throw Error(ErrorCode::DivisionByZero, "q-series with zero constant term");
    QSeries out(order());
    out[0] = 1 / c_[0];
    for (int k = 1; k <= order(); ++k) {
        mpq_class s = 0;
        for (int i = 1; i <= k; ++i) s += c_[static_cast<std::size_t>(i)] * out[k - i];
        out[k] = -s / c_[0];
    }
    return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    if (rhs.order() != order()) throw Error(ErrorCode::InvalidArgument, "q-series orders differ");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    if (rhs.order() != order()) throw Error(ErrorCode::InvalidArgument, "q-series orders differ");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

QSeries& QSeries::operator*=(const mpq_class& s) {
    for (auto& v : c_) v *= s;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int order = std::min(a.order(), b.order());
    QSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QSeries q_pochhammer_inverse(int n, int q_order) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "q-Pochhammer length must be non-negative");
    QSeries out = QSeries::one(q_order);
    // divide by (1 - q^i) one factor at a time: prefix sums with stride i
    for (int i = 1; i <= n && i <= q_order; ++i) {
        for (int k = i; k <= q_order; ++k) out[k] += out[k - i];
    }
    return out;
}

BivariateSeries::BivariateSeries(int t_order, int q_order) : q_order_(q_order) {
    require_order(t_order);
    require_order(q_order);
    slices_.assign(static_cast<std::size_t>(t_order) + 1, QSeries(q_order));
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries out(std::min(a.t_order(), b.t_order()), std::min(a.q_order(), b.q_order()));
    for (int i = 0; i <= out.t_order(); ++i) {
        for (int j = 0; i + j <= out.t_order(); ++j) {
            QSeries prod = QSeries(out.q_order(), a.slice(i).coefficients()) * QSeries(out.q_order(), b.slice(j).coefficients());
            out.slice(i + j) += prod;
        }
    }
    return out;
}

BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries out(std::min(a.t_order(), b.t_order()), std::min(a.q_order(), b.q_order()));
    const int qo = out.q_order();
    const QSeries b0_inv = QSeries(qo, b.slice(0).coefficients()).inverse();
    for (int i = 0; i <= out.t_order(); ++i) {
        QSeries rest(qo, a.slice(i).coefficients());
        for (int j = 1; j <= i; ++j) rest -= QSeries(qo, b.slice(j).coefficients()) * out.slice(i - j);
        out.slice(i) = rest * b0_inv;
    }
    return out;
}

bool BivariateSeries::is_integral() const {
    for (const auto& s : slices_) {
        for (const auto& c : s.coefficients()) {
            if (c.get_den() != 1) return false;
        }
    }
    return true;
}

ParallelogramParts parallelogram_gf_parts(int t_order, int q_order) {
    if (t_order < 1 || q_order < 1) throw Error(ErrorCode::InvalidArgument, "truncation orders must be at least 1");
    BivariateSeries num(t_order, q_order), den(t_order, q_order);
    for (int n = 0; n <= t_order; ++n) {
        const mpq_class sign = (n % 2 == 0) ? 1 : -1;
        // numerator: (-1)^n q^(C(n+1,2) + n + 1) t^(n+1) / ((q;q)_n (q;q)_{n+1})
        if (n + 1 <= t_order) {
            QSeries term = q_pochhammer_inverse(n, q_order) * q_pochhammer_inverse(n + 1, q_order);
            term = term.shifted(n * (n + 1) / 2 + n + 1);
            term *= sign;
            num.slice(n + 1) += term;
        }
        // denominator: (-1)^n q^(C(n,2) + n) t^n / (q;q)_n^2
        QSeries inv = q_pochhammer_inverse(n, q_order);
        QSeries term = (inv * inv).shifted(n * (n - 1) / 2 + n);
        term *= sign;
        den.slice(n) += term;
    }
    BivariateSeries quotient = num / den;
    if (!quotient.is_integral()) throw std::logic_error("parallelogram generating function has a non-integer coefficient");
    return {std::move(num), std::move(den), std::move(quotient)};
}

BivariateSeries parallelogram_gf(int t_order, int q_order) {
    BivariateSeries f = parallelogram_gf_parts(t_order, q_order).quotient;
    f.slice(0)[0] += 1;  // empty polyomino
    return f;
}

QSeries specialize_t_one(const BivariateSeries& s) {
    if (s.t_order() < s.q_order()) {
        throw Error(ErrorCode::InvalidArgument, "setting t = 1 needs t_order >= q_order");
    }
    QSeries out(s.q_order());
    for (int i = 0; i <= s.t_order(); ++i) out += s.slice(i);
    return out;
}

}  // namespace pointmod
