#pragma once

#include <map>
#include <string>
#include <vector>

#include "pointmod/modrep.hpp"
#include "pointmod/motive.hpp"

namespace pointmod {

/// One row of the classification tables: a class (or family of classes) of
/// length-n modules with its automorphism class and motivic contribution.
struct IsoClassRecord {
    int n = 0;
    std::string label;
    IsoKind kind = IsoKind::Points;
    int r = 0;
    Motive aut_class;
    /// Class of the parameter variety of the family (1 for a single module).
    Motive contribution;
    std::vector<int> summand_multiplicities;

    int end_dim() const { return aut_class.degree(); }
    /// contribution / aut_class
    Motive stratum_class() const { return contribution / aut_class; }
};

/// Throws Error{InvalidArgument} unless n is 2, 3 or 4.
std::vector<IsoClassRecord> table_rows(int n);

struct StratificationRow {
    std::string label;
    int r = 0;
    Motive summand;
};

struct StratificationReport {
    int n = 0;
    bool ok = false;
    Motive total;
    Motive expected;
    std::vector<StratificationRow> rows;
};

/// Sum of the table rows against the t^n coefficient of the punctual series.
StratificationReport verify_stratification(int n);

struct DistinctPairSolution {
    Motive xi;     // contribution of pairs with distinct tangent directions
    Motive total;  // xi + L
};

/// Solves L^4 = xi [GL_2]/(L-1)^2 + L + L [GL_2]/(L (L-1)) for xi.
DistinctPairSolution solve_distinct_pair_contribution();
Motive distinct_pair_contribution();

/// r -> class of the stratum of modules with r generators.
std::map<int, Motive> strata_classes(int n);

}  // namespace pointmod
