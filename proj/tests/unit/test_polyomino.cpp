#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pointmod/error.hpp"
#include "pointmod/polyomino.hpp"
#include "witnesses.hpp"

using namespace pointmod;

TEST_SUITE("polyomino") {

TEST_CASE("module diagram condition") {
    CHECK(is_module_diagram(std::vector<Cell>{{0, 0}, {1, 0}, {0, 1}}));
    CHECK(is_module_diagram(std::vector<Cell>{{1, 0}, {0, 1}, {1, 1}}));
    CHECK(!is_module_diagram(std::vector<Cell>{{0, 0}, {1, 0}, {1, 1}}));
    CHECK(!is_module_diagram(std::vector<Cell>{{0, 0}, {0, 1}, {1, 1}}));
    CHECK(is_module_diagram(std::vector<Cell>{{0, 0}, {1, 1}}));
    CHECK_THROWS_AS(module_from_cells({{0, 0}, {1, 0}, {1, 1}}), Error);
}

TEST_CASE("diagram basics") {
    const auto d = witness::diagram("1:2;0:1");
    CHECK(d.area() == 4);
    CHECK(d.columns() == 3);
    CHECK(d.height() == 2);
    CHECK(d.to_string() == "1:2;0:1");
    CHECK(SkewDiagram({{3, 4}, {2, 3}}) == d);
    CHECK(SkewDiagram::from_cells(d.cells()) == d);
    CHECK(d.rotated().rotated() == d);
    CHECK_THROWS_AS(SkewDiagram({}), Error);
    CHECK_THROWS_AS(SkewDiagram({{2, 1}}), Error);
    CHECK_THROWS_AS(SkewDiagram::from_cells({{0, 0}, {2, 0}}), Error);
}

TEST_CASE("parallelogram and cut points") {
    CHECK(is_parallelogram(witness::diagram("0:0")));
    const auto corner = witness::diagram("1:1;0:0");  // (1,0) and (0,1) touch at a corner
    CHECK(!is_parallelogram(corner));
    CHECK(has_cut_point(corner));
    CHECK(is_parallelogram(witness::diagram("1:1;0:1")));
    CHECK(is_parallelogram(witness::diagram("0:1;0:0")));
    CHECK(!has_cut_point(witness::diagram("0:1;0:0")));
    for (const auto& d : enumerate_parallelogram(3)) CHECK(is_parallelogram(d));
}

TEST_CASE("parallelogram counts") {
    const std::vector<std::size_t> c{0, 1, 2, 4, 9, 20, 46, 105, 242, 557, 1285, 2964, 6842, 15793, 36463};
    for (int a = 1; a <= 14; ++a) CHECK(enumerate_parallelogram(a).size() == c[static_cast<std::size_t>(a)]);
    CHECK_THROWS_AS(enumerate_parallelogram(15), Error);
    CHECK_THROWS_AS(enumerate_parallelogram(0), Error);
}

TEST_CASE("counts by area and columns agree with growth enumeration") {
    const auto grown = oracle::parallelogram_counts_by_growth(9);
    const auto counts = count_by_area_and_columns(9);
    CHECK(counts == grown);
    for (int n = 1; n <= 9; ++n) {
        CHECK(counts[static_cast<std::size_t>(n)][1] == 1);
        CHECK(counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] == 1);
    }
    std::uint64_t s = 0;
    for (auto v : counts[4]) s += v;
    CHECK(s == 9);
    CHECK(counts[3][2] == 2);
}

TEST_CASE("enumerated diagrams are valid indecomposable modules") {
    for (int a = 1; a <= 6; ++a) {
        for (const auto& d : enumerate_parallelogram(a)) {
            CAPTURE(d.to_string());
            CHECK(is_module_diagram(d));
            CHECK(is_parallelogram(d));
            CHECK(!has_cut_point(d));
            const auto m = module_from_diagram(d);
            CHECK(m.length() == static_cast<std::size_t>(a));
            CHECK(min_generators(m) == corner_generators(d));
            if (a <= 4) CHECK(classify(m).is_indecomposable());
        }
    }
}

TEST_CASE("corner-connected diagrams: indecomposable exactly without cut points") {
    const std::vector<std::size_t> c{0, 1, 2, 4, 9, 20, 46};
    for (int a = 1; a <= 6; ++a) {
        std::size_t indecomposable = 0;
        for (const auto& d : enumerate_corner_connected(a)) {
            CHECK(is_module_diagram(d));
            bool indec = false;
            if (a <= 4) {
                indec = classify(module_from_diagram(d)).is_indecomposable();
                CHECK(indec == !has_cut_point(d));
            } else {
                indec = !has_cut_point(d);
            }
            if (indec) ++indecomposable;
        }
        CHECK(indecomposable == c[static_cast<std::size_t>(a)]);
    }
}

TEST_CASE("fixed modules") {
    CHECK(enumerate_fixed_modules(1).size() == 1);
    CHECK(enumerate_fixed_modules(2).size() == 3);
    CHECK(enumerate_fixed_modules(3).size() == 7);
    const auto c = std::vector<std::uint64_t>{0, 1, 2, 4, 9, 20, 46, 105, 242};
    const auto euler = oracle::euler_transform(c, 8);
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_fixed_modules(n).size() == euler[static_cast<std::size_t>(n)]);
    // length-3 fixed modules are pairwise non-isomorphic
    std::set<std::string> names;
    for (const auto& parts : enumerate_fixed_modules(3)) {
        const auto label = classify(module_from_diagrams(parts));
        std::string key = label.name();
        for (const auto& p : label.parameter_strings()) key += " " + p;
        names.insert(key);
    }
    CHECK(names.size() == 7);
}

TEST_CASE("modules from diagrams") {
    const auto sq = module_from_cells({{0, 0}, {1, 0}, {0, 1}});
    CHECK(classify(sq).name() == "structure sheaf: A/m^2");
    const auto dsq = module_from_cells({{1, 0}, {0, 1}, {1, 1}});
    CHECK(classify(dsq).name() == "(A/m^2)^*");
    const auto strip = module_from_diagram(witness::diagram("0:0;0:0;0:0"));
    CHECK(strip.x().is_zero());
    CHECK(classify(strip).ideal->to_string() == "A/(x, m^3)");
    const auto both = module_from_diagrams({witness::diagram("0:1"), witness::diagram("0:0")});
    CHECK(classify(both).name() == "k + O_Z");
}

TEST_CASE("half-turn rotation realises the dual") {
    for (int a = 1; a <= 4; ++a) {
        for (const auto& d : enumerate_corner_connected(a)) {
            const auto r = d.rotated();
            CHECK(is_module_diagram(r));
            CHECK(classify(module_from_diagram(r)) == classify(dual(module_from_diagram(d))));
        }
    }
}

TEST_CASE("csv output") {
    const auto csv = diagrams_csv(enumerate_parallelogram(2));
    CHECK(csv == "0:0;0:0\n0:1\n");
    const auto counts = counts_csv(count_by_area_and_columns(2));
    CHECK(counts.rfind("area,columns,count\n", 0) == 0);
    CHECK(counts.find("2,1,1\n") != std::string::npos);
    CHECK(counts.find("2,2,1\n") != std::string::npos);
}

}  // TEST_SUITE
