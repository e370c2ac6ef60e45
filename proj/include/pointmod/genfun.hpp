#pragma once

#include <vector>

#include "pointmod/motive.hpp"

namespace pointmod {

/// Power series in t with motivic coefficients, truncated after t^order.
class MotiveSeries {
public:
    explicit MotiveSeries(int order);
    MotiveSeries(int order, std::vector<Motive> coefficients);

    static MotiveSeries one(int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Motive& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    Motive& operator[](int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }
    const std::vector<Motive>& coefficients() const noexcept { return coeffs_; }

    MotiveSeries truncated(int order) const;

    MotiveSeries& operator+=(const MotiveSeries& rhs);
    friend MotiveSeries operator*(const MotiveSeries& a, const MotiveSeries& b);
    friend bool operator==(const MotiveSeries&, const MotiveSeries&) = default;

private:
    std::vector<Motive> coeffs_;
};

/// (1 - L^a t^m)^(-e)
struct ProductFactor {
    int l_exponent;
    int t_degree;
    int exponent;
    friend auto operator<=>(const ProductFactor&, const ProductFactor&) = default;
};

/// prod_{k>=1} (1 - L^(base - k) t^m)^(-1)
struct ColumnFamily {
    int base;
    int t_degree;
    friend auto operator<=>(const ColumnFamily&, const ColumnFamily&) = default;
};

/// Symbolic product of finite factors and infinite k-columns. Kept symbolic so
/// that raising to a power of L is a rewrite of exponents, not series algebra.
struct GeometricProduct {
    std::vector<ProductFactor> factors;
    std::vector<ColumnFamily> columns;

    /// Multiset equality (order of entries is irrelevant).
    friend bool operator==(const GeometricProduct& a, const GeometricProduct& b);
};

/// prod_{k,m>=1} (1 - L^(2-k) t^m)^(-1), with m running up to max_t_degree.
GeometricProduct feit_fine_product(int max_t_degree);
/// prod_{k,m>=1} (1 - L^(-k) t^m)^(-1), with m running up to max_t_degree.
GeometricProduct punctual_product(int max_t_degree);
/// prod_{m>=1} (1 - L^(m-1) t^m)^(-1), with m running up to max_t_degree.
GeometricProduct hilb_punctual_product(int max_t_degree);

MotiveSeries expand(const GeometricProduct& p, int order);

/// Closed form of one column: the t^(m j) coefficient is
/// L^(base*j + j(j-1)/2) / prod_{i=1}^{j} (L^i - 1).
MotiveSeries column_series(int base, int t_degree, int order);

/// Raises p to the power L^shift (shifts every L-exponent and column base).
GeometricProduct l_power_shift(const GeometricProduct& p, int shift);

MotiveSeries feit_fine_series(int order);
MotiveSeries punctual_series(int order);
MotiveSeries hilb_punctual_series(int order);

/// Class of the stratum of structure sheaves: [Hilb^n_0] / (L^(n-1) (L - 1)).
Motive stratum_structure_sheaves(int n);

struct CurvilinearSplit {
    Motive curvilinear;
    Motive noncurvilinear;
};

/// Curvilinear locus L^(n-2)(L+1) of [Hilb^n_0] and its complement.
CurvilinearSplit curvilinear_split(int n);

}  // namespace pointmod
