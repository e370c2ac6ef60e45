#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pointmod/genfun.hpp"

using namespace pointmod;

namespace {

Motive L(int k = 1) { return Motive::L_power(k); }

const Motive kC3 = (L(8) + L(7) + L(6) - L(5) - L(4)) / gl_class(3);
const Motive kC4 = (L(15) + 2 * L(14) + L(13) + L(12) - 2 * L(11) - 2 * L(10) - L(9) + L(7)) / gl_class(4);

GeometricProduct random_finite_product(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 4), a(-3, 3), m(1, 3), e(-2, 3);
    GeometricProduct p;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) p.factors.push_back({a(rng), m(rng), e(rng)});
    return p;
}

}  // namespace

TEST_SUITE("genfun") {

TEST_CASE("punctual series low coefficients") {
    const auto s = punctual_series(4);
    CHECK(s[0] == Motive(1));
    CHECK(s[1] == Motive(1) / (L() - 1));
    CHECK(s[2] == Motive(1) / gl_class(2) + (L() + 1) / (L() * (L() - 1)));
    CHECK(s[3] == kC3);
    CHECK(s[4] == kC4);
    CHECK(punctual_series(0)[0] == Motive(1));
}

TEST_CASE("feit-fine series") {
    const auto s = feit_fine_series(2);
    CHECK(s[1] == L(2) / (L() - 1));
    // commuting pairs of 2x2 matrices over F_q, divided by |GL_2|
    for (int q : {2, 3}) {
        const mpq_class pairs(static_cast<unsigned long>(oracle::count_pairs_exhaustive(2, q, false)));
        CHECK(s[2].specialize(q) * gl_class(2).specialize(q) == pairs);
    }
}

TEST_CASE("hilbert series of the punctual scheme") {
    const auto h = hilb_punctual_series(5);
    CHECK(h[0] == Motive(1));
    CHECK(h[1] == Motive(1));
    CHECK(h[2] == L() + 1);
    CHECK(h[3] == L(2) + L() + 1);
    CHECK(h[4] == L(3) + 2 * L(2) + L() + 1);
    // coefficients are partition counts at L = 1
    for (int n = 0; n <= 5; ++n) CHECK(h[n].specialize(1) == mpq_class(static_cast<unsigned long>(oracle::partitions_bounded(n, n))));
}

TEST_CASE("structure sheaf strata") {
    CHECK(stratum_structure_sheaves(1) == Motive(1) / (L() - 1));
    CHECK(stratum_structure_sheaves(3) == (L(2) + L() + 1) / (L(2) * (L() - 1)));
    CHECK(stratum_structure_sheaves(4) == (L(3) + 2 * L(2) + L() + 1) / (L(3) * (L() - 1)));
}

TEST_CASE("curvilinear split") {
    const auto s2 = curvilinear_split(2);
    CHECK(s2.curvilinear == L() + 1);
    CHECK(s2.noncurvilinear == Motive(0));
    const auto s3 = curvilinear_split(3);
    CHECK(s3.curvilinear == L() * (L() + 1));
    CHECK(s3.noncurvilinear == Motive(1));
    const auto s4 = curvilinear_split(4);
    CHECK(s4.curvilinear == L(2) * (L() + 1));
    CHECK(s4.noncurvilinear == L(2) + L() + 1);
    for (int n = 2; n <= 6; ++n) {
        const auto s = curvilinear_split(n);
        CHECK(s.curvilinear + s.noncurvilinear == hilb_punctual_series(n)[n]);
    }
}

TEST_CASE("column series closed form") {
    const auto c = column_series(0, 1, 2);
    CHECK(c[1] == Motive(1) / (L() - 1));
    CHECK(c[2] == L() / ((L() - 1) * (L(2) - 1)));
    CHECK(column_series(2, 1, 1)[1] == L(2) / (L() - 1));
    const auto c2 = column_series(-1, 2, 5);
    CHECK(c2[1] == Motive(0));
    CHECK(c2[3] == Motive(0));
    CHECK(c2[2] == Motive(1) / (L() * (L() - 1)));
}

TEST_CASE("column series stabilises against truncated products") {
    for (int a0 : {-2, 0, 1, 2}) {
        for (int m : {1, 2}) {
            for (int order = 0; order <= 6; ++order) {
                const auto closed = column_series(a0, m, order);
                for (int K = order; K <= order + 14; ++K) {
                    const int safe = K - a0 - order * std::max(0, a0 - 1) - 1;
                    const auto brute = oracle::truncated_column_product(a0, m, order, K, safe);
                    for (int j = 0; j <= order; ++j) {
                        CAPTURE(a0);
                        CAPTURE(m);
                        CAPTURE(K);
                        CAPTURE(j);
                        CHECK(oracle::laurent_expansion(closed[j], safe) == brute[static_cast<std::size_t>(j)]);
                    }
                }
            }
        }
    }
}

TEST_CASE("truncation coherence") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(punctual_series(n).truncated(n - 1) == punctual_series(n - 1));
        CHECK(feit_fine_series(n).truncated(n - 1) == feit_fine_series(n - 1));
        CHECK(hilb_punctual_series(n).truncated(n - 1) == hilb_punctual_series(n - 1));
        CHECK(expand(punctual_product(7), n).truncated(n - 1) == expand(punctual_product(7), n - 1));
    }
}

TEST_CASE("expansion depends only on low t-degrees") {
    CHECK(expand(feit_fine_product(9), 4) == expand(feit_fine_product(4), 4));
    CHECK(expand(hilb_punctual_product(9), 4) == hilb_punctual_series(4));
}

TEST_CASE("power shift") {
    const auto p = punctual_product(6);
    CHECK(l_power_shift(p, 2) == feit_fine_product(6));
    CHECK(l_power_shift(p, 0) == p);
    for (int s = -3; s <= 3; ++s) CHECK(l_power_shift(l_power_shift(p, s), -s) == p);
    CHECK(expand(l_power_shift(p, 2), 5) == feit_fine_series(5));
    CHECK(!(l_power_shift(p, 1) == p));
}

TEST_CASE("finite products agree with naive multiplication") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_finite_product(rng);
        const int order = 5;
        CHECK(expand(p, order) == oracle::naive_factor_product(p.factors, order));
        std::uniform_int_distribution<int> shift(-3, 3);
        const int s = shift(rng);
        auto shifted = p.factors;
        for (auto& f : shifted) f.l_exponent += s;
        CHECK(expand(l_power_shift(p, s), order) == oracle::naive_factor_product(shifted, order));
    }
}

TEST_CASE("product equality ignores entry order") {
    GeometricProduct a{{{1, 1, 1}, {2, 2, -1}}, {{0, 1}}};
    GeometricProduct b{{{2, 2, -1}, {1, 1, 1}}, {{0, 1}}};
    CHECK(a == b);
    b.columns.push_back({0, 1});
    CHECK(!(a == b));
}

}  // TEST_SUITE
