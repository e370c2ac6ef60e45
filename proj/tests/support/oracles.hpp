#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the code path it is used to check.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pointmod/genfun.hpp"
#include "pointmod/modrep.hpp"
#include "pointmod/motive.hpp"

namespace oracle {

using LaurentSeries = std::map<int, mpq_class>;  // u-degree -> coefficient, u = 1/L

/// Expansion of a motive in u = 1/L, exact through u^max_degree.
LaurentSeries laurent_expansion(const pointmod::Motive& m, int max_degree);

/// prod_{k=1}^{K} (1 - u^(k - a0) t^m)^(-1), multiplied out term by term;
/// entry j is the t^j coefficient through u^max_degree.
std::vector<LaurentSeries> truncated_column_product(int a0, int m, int order, int K, int max_degree);

/// prod (1 - L^a t^m)^(-e) by repeated multiplication with 1 + x + x^2 + ...
/// (or with 1 - x for negative e); no binomial coefficients.
pointmod::MotiveSeries naive_factor_product(const std::vector<pointmod::ProductFactor>& factors, int order);

/// Number of invertible n x n matrices over F_p, by enumeration.
std::uint64_t count_invertible(int n, int p);

/// Pairs (X, Y) of n x n matrices over F_p with XY = YX (and both nilpotent
/// if requested), by enumerating all pairs.
std::uint64_t count_pairs_exhaustive(int n, int p, bool nilpotent);

/// Euler transform: number of multisets of total weight n built from c[k]
/// kinds of weight k (c[0] ignored).
std::vector<std::uint64_t> euler_transform(const std::vector<std::uint64_t>& c, int n);

/// counts[a][cols] of parallelogram polyominoes, found by growing every fixed
/// polyomino cell by cell and keeping the convex ones that contain the
/// bottom-right and top-left cells of their bounding box.
std::vector<std::vector<std::uint64_t>> parallelogram_counts_by_growth(int max_area);

/// Partitions of n into parts of size at most k.
std::uint64_t partitions_bounded(int n, int k);

/// Random nonzero-denominator motive with small coefficients.
pointmod::Motive random_motive(std::mt19937_64& rng, int max_degree = 3, int max_coeff = 4);

/// Random valid presentation over F_p: random nilpotent X, then random
/// nilpotent Y in its centralizer (own mod-p elimination).
pointmod::ModulePresentation random_presentation(std::mt19937_64& rng, int n, int p);

/// Random invertible matrix over the given field (rejection sampling).
pointmod::Matrix random_invertible(std::mt19937_64& rng, const pointmod::Field& f, std::size_t n);

pointmod::ModulePresentation conjugate(const pointmod::ModulePresentation& m, const pointmod::Matrix& g);

}  // namespace oracle
