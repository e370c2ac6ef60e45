#include "pointmod/catalog.hpp"

#include "pointmod/error.hpp"
#include "pointmod/genfun.hpp"

namespace pointmod {

namespace {

Motive L(int k = 1) { return Motive::L_power(k); }
Motive c(long v) { return Motive(v); }

IsoClassRecord row(int n, std::string label, IsoKind kind, int r, Motive aut, Motive contribution, std::vector<int> mults) {
    return {n, std::move(label), kind, r, std::move(aut), std::move(contribution), std::move(mults)};
}

}  // namespace

std::vector<IsoClassRecord> table_rows(int n) {
    const Motive Lm1 = L() - c(1);
    switch (n) {
        case 2:
            return {
                row(2, "O_Z", IsoKind::StructureSheaf, 1, L() * Lm1, L() + c(1), {1}),
                row(2, "k^2", IsoKind::Points, 2, gl_class(2), c(1), {2}),
            };
        case 3:
            return {
                row(3, "O_Z", IsoKind::StructureSheaf, 1, L(2) * Lm1, L(2) + L() + c(1), {1}),
                row(3, "(A/m^2)^*", IsoKind::DualSquare, 2, L(2) * Lm1, c(1), {1}),
                row(3, "k + O_Z", IsoKind::PointPlusLength2, 2, L(3) * Lm1 * Lm1, L() + c(1), {1, 1}),
                row(3, "k^3", IsoKind::Points, 3, gl_class(3), c(1), {3}),
            };
        case 4:
            return {
                row(4, "O_Z", IsoKind::StructureSheaf, 1, L(3) * Lm1, L(3) + c(2) * L(2) + L() + c(1), {1}),
                row(4, "F1", IsoKind::F1, 2, L(3) * Lm1, L() + c(1), {1}),
                row(4, "F2", IsoKind::F2, 2, L(5) * Lm1, L() + c(1), {1}),
                row(4, "k + A/m^2", IsoKind::PointPlusSquare, 2, L(5) * Lm1 * Lm1, c(1), {1, 1}),
                row(4, "k + O_Z (curvilinear, length 3)", IsoKind::PointPlusCurvilinear3, 2, L(4) * Lm1 * Lm1,
                    L() * (L() + c(1)), {1, 1}),
                row(4, "O_Z + O_Z", IsoKind::SumOfTwoEqualLength2, 2, L(4) * gl_class(2), L() + c(1), {2}),
                row(4, "O_Z + O_Z'", IsoKind::SumOfTwoDistinctLength2, 2, L(4) * Lm1 * Lm1,
                    L() * (L(2) + c(1)) / (L() + c(1)), {1, 1}),
                row(4, "k^2 + O_Z", IsoKind::TwoPointsPlusLength2, 3, L(5) * Lm1 * gl_class(2), L() + c(1), {2, 1}),
                row(4, "k + (A/m^2)^*", IsoKind::PointPlusDualSquare, 3, L(5) * Lm1 * Lm1, c(1), {1, 1}),
                row(4, "k^4", IsoKind::Points, 4, gl_class(4), c(1), {4}),
            };
        default:
            throw Error(ErrorCode::InvalidArgument, "tables exist for n = 2, 3, 4 only");
    }
}

StratificationReport verify_stratification(int n) {
    StratificationReport report;
    report.n = n;
    for (const auto& rec : table_rows(n)) {
        Motive s = rec.stratum_class();
        report.total += s;
        report.rows.push_back({rec.label, rec.r, std::move(s)});
    }
    report.expected = punctual_series(n)[n];
    report.ok = report.total == report.expected;
    return report;
}

DistinctPairSolution solve_distinct_pair_contribution() {
    const Motive gl2 = gl_class(2);
    const Motive Lm1 = L() - c(1);
    // L^4 = xi * [GL2]/(L-1)^2 + L + L [GL2]/(L(L-1))
    const Motive rest = L() + L() * gl2 / (L() * Lm1);
    Motive xi = (L(4) - rest) * Lm1 * Lm1 / gl2;
    Motive total = xi + L();
    return {std::move(xi), std::move(total)};
}

Motive distinct_pair_contribution() { return solve_distinct_pair_contribution().total; }

std::map<int, Motive> strata_classes(int n) {
    std::map<int, Motive> out;
    for (const auto& rec : table_rows(n)) out[rec.r] += rec.stratum_class();
    return out;
}

}  // namespace pointmod
