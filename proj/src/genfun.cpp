#include "pointmod/genfun.hpp"

#include <algorithm>
#include <utility>

#include "pointmod/error.hpp"

namespace pointmod {

namespace {

void require_order(int order) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be non-negative");
}

mpz_class binomial(long n, long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// (1 - L^a t^m)^(-e) truncated at `order`.
MotiveSeries factor_series(const ProductFactor& f, int order) {
    MotiveSeries s = MotiveSeries::one(order);
    if (f.exponent == 0) return s;
    const Motive base = Motive::L_power(f.l_exponent);
    Motive power(1);
    for (long j = 1; static_cast<long>(f.t_degree) * j <= order; ++j) {
        power *= base;
        mpz_class c = f.exponent > 0 ? binomial(f.exponent + j - 1, j) : binomial(-f.exponent, j);
        if (f.exponent < 0 && (j & 1)) c = -c;
        s[static_cast<int>(f.t_degree * j)] = Motive(c) * power;
    }
    return s;
}

}  // namespace

MotiveSeries::MotiveSeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {
    require_order(order);
}

MotiveSeries::MotiveSeries(int order, std::vector<Motive> coefficients) : coeffs_(std::move(coefficients)) {
    require_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

MotiveSeries MotiveSeries::one(int order) {
    MotiveSeries s(order);
    s[0] = Motive(1);
    return s;
}

MotiveSeries MotiveSeries::truncated(int order) const {
    require_order(order);
    if (order > this->order()) throw Error(ErrorCode::InvalidArgument, "cannot truncate to a higher order");
    return MotiveSeries(order, std::vector<Motive>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

MotiveSeries& MotiveSeries::operator+=(const MotiveSeries& rhs) {
    if (rhs.order() != order()) throw Error(ErrorCode::InvalidArgument, "series orders differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

MotiveSeries operator*(const MotiveSeries& a, const MotiveSeries& b) {
    const int order = std::min(a.order(), b.order());
    MotiveSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

bool operator==(const GeometricProduct& a, const GeometricProduct& b) {
    auto fa = a.factors, fb = b.factors;
    auto ca = a.columns, cb = b.columns;
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return fa == fb && ca == cb;
}

GeometricProduct feit_fine_product(int max_t_degree) {
    GeometricProduct p;
    for (int m = 1; m <= max_t_degree; ++m) p.columns.push_back({2, m});
    return p;
}

GeometricProduct punctual_product(int max_t_degree) {
    GeometricProduct p;
    for (int m = 1; m <= max_t_degree; ++m) p.columns.push_back({0, m});
    return p;
}

GeometricProduct hilb_punctual_product(int max_t_degree) {
    GeometricProduct p;
    for (int m = 1; m <= max_t_degree; ++m) p.factors.push_back({m - 1, m, 1});
    return p;
}

MotiveSeries column_series(int base, int t_degree, int order) {
    require_order(order);
    if (t_degree < 1) throw Error(ErrorCode::InvalidArgument, "column t-degree must be positive");
    MotiveSeries s = MotiveSeries::one(order);
    Motive denominator(1);
    for (long j = 1; static_cast<long>(t_degree) * j <= order; ++j) {
        denominator *= Motive::L_power(static_cast<int>(j)) - Motive(1);
        const long l_exp = static_cast<long>(base) * j + j * (j - 1) / 2;
        s[static_cast<int>(t_degree * j)] = Motive::L_power(static_cast<int>(l_exp)) / denominator;
    }
    return s;
}

MotiveSeries expand(const GeometricProduct& p, int order) {
    require_order(order);
    MotiveSeries acc = MotiveSeries::one(order);
    for (const auto& f : p.factors) {
        if (f.t_degree < 1) throw Error(ErrorCode::InvalidArgument, "factor t-degree must be positive");
        if (f.t_degree <= order) acc = acc * factor_series(f, order);
    }
    for (const auto& c : p.columns) {
        if (c.t_degree < 1) throw Error(ErrorCode::InvalidArgument, "column t-degree must be positive");
        if (c.t_degree <= order) acc = acc * column_series(c.base, c.t_degree, order);
    }
    return acc;
}

GeometricProduct l_power_shift(const GeometricProduct& p, int shift) {
    GeometricProduct out = p;
    for (auto& f : out.factors) f.l_exponent += shift;
    for (auto& c : out.columns) c.base += shift;
    return out;
}

MotiveSeries feit_fine_series(int order) { return expand(feit_fine_product(order), order); }

MotiveSeries punctual_series(int order) { return expand(punctual_product(order), order); }

MotiveSeries hilb_punctual_series(int order) { return expand(hilb_punctual_product(order), order); }

Motive stratum_structure_sheaves(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "stratum_structure_sheaves: n must be positive");
    const Motive hilb = hilb_punctual_series(n)[n];
    return hilb / (Motive::L_power(n - 1) * (Motive::L() - Motive(1)));
}

CurvilinearSplit curvilinear_split(int n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "curvilinear_split: n must be at least 2");
    const Motive hilb = hilb_punctual_series(n)[n];
    Motive curvilinear = Motive::L_power(n - 2) * (Motive::L() + Motive(1));
    Motive rest = hilb - curvilinear;
    return {std::move(curvilinear), std::move(rest)};
}

}  // namespace pointmod
