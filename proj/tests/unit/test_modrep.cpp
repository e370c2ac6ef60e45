#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pointmod/error.hpp"
#include "pointmod/modrep.hpp"
#include "pointmod/polyomino.hpp"

using namespace pointmod;

namespace {

const Field Q = Field::rational();

Matrix elementary(const Field& f, std::size_t n, std::size_t i, std::size_t j) {  // 1-based
    Matrix m(f, n, n);
    m(i - 1, j - 1) = FieldElement(f, 1);
    return m;
}

Matrix ints(const std::vector<std::vector<long>>& rows, const Field& f = Q) { return Matrix::from_ints(f, rows); }

ModulePresentation square_point(const Field& f = Q) { return validate(elementary(f, 3, 2, 1), elementary(f, 3, 3, 1)); }

/// Generators v1, v2 followed by mM = <w1, w2>; x v = A_x v, y v = A_y v.
ModulePresentation pencil_module(const Matrix& ax, const Matrix& ay) {
    const Field f = ax.field();
    Matrix x(f, 4, 4), y(f, 4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            x(2 + i, j) = ax(i, j);
            y(2 + i, j) = ay(i, j);
        }
    }
    return validate(x, y);
}

ModulePresentation jordan_x(std::size_t n, const Field& f = Q) {
    Matrix x(f, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) x(i + 1, i) = FieldElement(f, 1);
    return validate(x, Matrix(f, n, n));
}

ModulePresentation jordan_y(std::size_t n, const Field& f = Q) {
    const auto m = jordan_x(n, f);
    return validate(m.y(), m.x());
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

std::size_t rank_of_cols(const ModulePresentation& m) { return rank(hstack(m.x(), m.y())); }

}  // namespace

TEST_SUITE("modrep") {

TEST_CASE("validate") {
    CHECK_NOTHROW(square_point());
    CHECK_NOTHROW(validate(Matrix(Q, 3, 3), Matrix(Q, 3, 3)));
    CHECK(code_of([] { validate(elementary(Q, 2, 1, 2), elementary(Q, 2, 2, 1)); }) == ErrorCode::NotCommuting);
    CHECK(code_of([] { validate(Matrix::identity(Q, 2), Matrix::identity(Q, 2)); }) == ErrorCode::NotNilpotent);
    CHECK(code_of([] { validate(Matrix(Q, 2, 2), Matrix(Q, 3, 3)); }) == ErrorCode::ShapeMismatch);
    CHECK(code_of([] { validate(Matrix(Q, 2, 3), Matrix(Q, 2, 3)); }) == ErrorCode::ShapeMismatch);
    CHECK(code_of([] { validate(Matrix(Q, 2, 2), Matrix(Field::prime(2), 2, 2)); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("generators, powers, socle") {
    const auto sq = square_point();
    CHECK(min_generators(sq) == 1);
    CHECK(power_dims(sq) == std::vector<std::size_t>{3, 2, 0});
    CHECK(socle_dimension(sq) == 2);
    const auto k3 = validate(Matrix(Q, 3, 3), Matrix(Q, 3, 3));
    CHECK(min_generators(k3) == 3);
    CHECK(power_dims(k3) == std::vector<std::size_t>{3, 0});
    CHECK(min_generators(dual(sq)) == 2);
    CHECK(power_dims(jordan_x(4)) == std::vector<std::size_t>{4, 3, 2, 1, 0});
    const auto f2 = pencil_module(Matrix::identity(Q, 2), ints({{0, 1}, {0, 0}}));
    CHECK(power_dims(f2) == std::vector<std::size_t>{4, 2, 0});
    CHECK(min_generators(zero_module(Q)) == 0);
}

TEST_CASE("endomorphism algebra") {
    CHECK(end_algebra(validate(Matrix(Q, 2, 2), Matrix(Q, 2, 2))).dimension == 4);
    CHECK(end_algebra(square_point()).dimension == 3);
    const auto f2 = pencil_module(Matrix::identity(Q, 2), ints({{0, 1}, {0, 0}}));
    const auto e = end_algebra(f2);
    CHECK(e.dimension == 6);
    for (const auto& p : e.basis) {
        CHECK(p * f2.x() == f2.x() * p);
        CHECK(p * f2.y() == f2.y() * p);
    }
}

TEST_CASE("dual and direct sum") {
    const auto sq = square_point();
    CHECK(dual(dual(sq)) == sq);
    const auto dsq = dual(sq);
    CHECK(classify(dsq).kind == IsoKind::DualSquare);
    CHECK(classify(dsq).is_indecomposable());
    const auto k3 = validate(Matrix(Q, 3, 3), Matrix(Q, 3, 3));
    CHECK(dual(k3) == k3);
    const auto k1 = validate(Matrix(Q, 1, 1), Matrix(Q, 1, 1));
    CHECK(direct_sum(k1, k1) == validate(Matrix(Q, 2, 2), Matrix(Q, 2, 2)));
    CHECK(direct_sum(sq, zero_module(Q)) == sq);
    CHECK(direct_sum(zero_module(Q), sq) == sq);
    const auto s = direct_sum(sq, jordan_x(2));
    CHECK(s.length() == 5);
    CHECK(min_generators(s) == 2);
    CHECK(code_of([&] { direct_sum(sq, square_point(Field::prime(3))); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("pencil invariants") {
    const auto f2 = pencil_invariants(Matrix::identity(Q, 2), ints({{0, 1}, {0, 0}}));
    CHECK(!f2.identically_zero);
    CHECK(f2.det_form == BinaryQuadratic{FieldElement(Q, 1), FieldElement(Q, 0), FieldElement(Q, 0)});
    REQUIRE(f2.roots.size() == 1);
    CHECK(f2.roots[0].point == ProjectivePoint(FieldElement(Q, 0), FieldElement(Q, 1)));
    CHECK(f2.roots[0].multiplicity == 2);
    CHECK(f2.roots[0].rank == 1);

    const auto split = pencil_invariants(ints({{1, 0}, {0, 0}}), ints({{0, 0}, {0, 1}}));
    CHECK(split.det_form == BinaryQuadratic{FieldElement(Q, 0), FieldElement(Q, 1), FieldElement(Q, 0)});
    REQUIRE(split.roots.size() == 2);
    for (const auto& r : split.roots) {
        CHECK(r.multiplicity == 1);
        CHECK(r.rank == 1);
    }

    const auto zero = pencil_invariants(ints({{1, 0}, {0, 0}}), ints({{0, 0}, {1, 0}}));
    CHECK(zero.identically_zero);

    const auto scalar = pencil_invariants(Matrix::identity(Q, 2), Matrix(Q, 2, 2));
    REQUIRE(scalar.roots.size() == 1);
    CHECK(scalar.roots[0].rank == 0);

    const auto conj = pencil_invariants(Matrix::identity(Q, 2), ints({{0, -1}, {1, 0}}));
    CHECK(conj.irreducible);
    CHECK(conj.roots.empty());

    CHECK(code_of([] { pencil_invariants(ints({{1, 0}, {0, 0}}), ints({{2, 0}, {0, 0}})); }) == ErrorCode::RankConditionViolated);
}

TEST_CASE("pencil invariants under equivalence and coordinate change") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        const Field f = Field::prime(p);
        std::mt19937_64 rng(p);
        std::uniform_int_distribution<long> e(0, static_cast<long>(p) - 1);
        int checked = 0;
        while (checked < 60) {
            Matrix ax(f, 2, 2), ay(f, 2, 2);
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    ax(i, j) = FieldElement(f, e(rng));
                    ay(i, j) = FieldElement(f, e(rng));
                }
            }
            if (rank(hstack(ax, ay)) != 2) continue;
            ++checked;
            const auto base = pencil_invariants(ax, ay);
            const Matrix h = oracle::random_invertible(rng, f, 2), k = oracle::random_invertible(rng, f, 2);
            const auto moved = pencil_invariants(h * ax * k, h * ay * k);
            CHECK(moved.identically_zero == base.identically_zero);
            CHECK(moved.irreducible == base.irreducible);
            REQUIRE(moved.roots.size() == base.roots.size());
            for (std::size_t i = 0; i < base.roots.size(); ++i) {
                CHECK(moved.roots[i].point == base.roots[i].point);
                CHECK(moved.roots[i].multiplicity == base.roots[i].multiplicity);
                CHECK(moved.roots[i].rank == base.roots[i].rank);
            }
            const FieldElement scale = determinant(h) * determinant(k);
            CHECK(moved.det_form == BinaryQuadratic{scale * base.det_form.a, scale * base.det_form.b, scale * base.det_form.c});

            // new pencil (a Ax + b Ay, c Ax + d Ay): roots move by the inverse transpose
            const Matrix g = oracle::random_invertible(rng, f, 2);
            const Matrix bx = g(0, 0) * ax + g(0, 1) * ay;
            const Matrix by = g(1, 0) * ax + g(1, 1) * ay;
            const auto changed = pencil_invariants(bx, by);
            const Matrix git = inverse(g.transpose());
            REQUIRE(changed.roots.size() == base.roots.size());
            std::vector<PencilRoot> expected;
            for (const auto& r : base.roots) {
                const auto v = git.apply({r.point.first(), r.point.second()});
                expected.push_back({ProjectivePoint(v[0], v[1]), r.multiplicity, r.rank});
            }
            for (const auto& r : changed.roots) {
                bool found = false;
                for (const auto& x : expected) {
                    if (x.point == r.point) {
                        found = true;
                        CHECK(x.multiplicity == r.multiplicity);
                        CHECK(x.rank == r.rank);
                    }
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("annihilator ideals") {
    CHECK(annihilator(square_point()).to_string() == "A/m^2");
    CHECK(annihilator(jordan_x(4)).to_string() == "A/(y, m^4)");
    CHECK(annihilator(jordan_y(3)).to_string() == "A/(x, m^3)");
}

TEST_CASE("classify small lengths") {
    const auto k1 = classify(validate(Matrix(Q, 1, 1), Matrix(Q, 1, 1)));
    CHECK(k1.name() == "k");
    CHECK(k1.is_indecomposable());
    const auto d = classify(jordan_x(2));
    CHECK(d.kind == IsoKind::StructureSheaf);
    REQUIRE(d.parameters.size() == 1);
    CHECK(d.parameters[0].to_string() == "[1:0]");
    CHECK(classify(jordan_y(2)).parameters[0].to_string() == "[0:1]");
    CHECK(classify(validate(Matrix(Q, 2, 2), Matrix(Q, 2, 2))).name() == "k^2");

    const auto sq = classify(square_point());
    CHECK(sq.kind == IsoKind::StructureSheaf);
    CHECK(sq.name() == "structure sheaf: A/m^2");
    CHECK(!sq.curvilinear);
    const auto cur = classify(jordan_x(3));
    CHECK(cur.curvilinear);
    CHECK(classify(direct_sum(jordan_x(2), validate(Matrix(Q, 1, 1), Matrix(Q, 1, 1)))).name() == "k + O_Z");
    CHECK(code_of([] { classify(zero_module(Q)); }) == ErrorCode::UnsupportedLength);
    CHECK(code_of([] { classify(jordan_x(5)); }) == ErrorCode::UnsupportedLength);
}

TEST_CASE("classify length four examples") {
    // x v1 = v3, x v3 = v4, y v2 = v4 (t = 0 member of the indecomposable family)
    Matrix x(Q, 4, 4), y(Q, 4, 4);
    x(2, 0) = FieldElement(Q, 1);
    x(3, 2) = FieldElement(Q, 1);
    y(3, 1) = FieldElement(Q, 1);
    const auto f1 = classify(validate(x, y));
    CHECK(f1.kind == IsoKind::F1);
    REQUIRE(f1.parameters.size() == 1);
    CHECK(f1.parameters[0].to_string() == "[1:0]");
    CHECK(f1.is_indecomposable());
    CHECK(end_algebra(validate(x, y)).dimension == 4);

    const auto two = classify(direct_sum(jordan_x(2), jordan_y(2)));
    CHECK(two.kind == IsoKind::SumOfTwoDistinctLength2);
    REQUIRE(two.parameters.size() == 2);
    CHECK(two.parameters[0].to_string() == "[0:1]");
    CHECK(two.parameters[1].to_string() == "[1:0]");
    CHECK(!two.is_indecomposable());

    const auto f2 = classify(pencil_module(Matrix::identity(Q, 2), ints({{0, 1}, {0, 0}})));
    CHECK(f2.kind == IsoKind::F2);
    CHECK(f2.parameters.size() == 1);

    CHECK(classify(direct_sum(jordan_x(2), jordan_x(2))).kind == IsoKind::SumOfTwoEqualLength2);
    CHECK(classify(direct_sum(square_point(), validate(Matrix(Q, 1, 1), Matrix(Q, 1, 1)))).kind == IsoKind::PointPlusSquare);
    CHECK(classify(direct_sum(jordan_x(3), validate(Matrix(Q, 1, 1), Matrix(Q, 1, 1)))).kind == IsoKind::PointPlusCurvilinear3);
}

TEST_CASE("irrational directions over Q") {
    const auto m = pencil_module(Matrix::identity(Q, 2), ints({{0, 2}, {1, 0}}));  // det = l^2 - 2 m^2
    CHECK(code_of([&] { classify(m); }) == ErrorCode::IrrationalParameter);
    // the same pencil splits over F_7 (2 = 3^2) and is irreducible over F_5
    const auto m7 = pencil_module(Matrix::identity(Field::prime(7), 2), ints({{0, 2}, {1, 0}}, Field::prime(7)));
    CHECK(classify(m7).kind == IsoKind::SumOfTwoDistinctLength2);
    CHECK(classify(m7).parameters.size() == 2);
    const auto m5 = pencil_module(Matrix::identity(Field::prime(5), 2), ints({{0, 2}, {1, 0}}, Field::prime(5)));
    const auto l5 = classify(m5);
    CHECK(l5.kind == IsoKind::SumOfTwoDistinctLength2);
    CHECK(l5.conjugate_pair.has_value());
}

TEST_CASE("automorphism classes") {
    const Motive L = Motive::L();
    const std::vector<int> four{4}, two{2}, one{1};
    CHECK(aut_motive(four, 16) == gl_class(4));
    CHECK(aut_motive(two, 8) == L.pow(4) * gl_class(2));
    CHECK(aut_motive(one, 4) == L.pow(3) * (L - 1));
    CHECK(code_of([&] { aut_motive(two, 3); }) == ErrorCode::InconsistentDimensions);
}

TEST_CASE("invariant relations on random presentations") {
    std::mt19937_64 rng(99);
    for (int p : {2, 3}) {
        for (int n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 25; ++trial) {
                const auto m = oracle::random_presentation(rng, n, p);
                const auto dims = power_dims(m);
                CHECK(min_generators(m) + dims[1] == static_cast<std::size_t>(n));
                CHECK(min_generators(m) + rank_of_cols(m) == static_cast<std::size_t>(n));
                for (std::size_t i = 0; i + 1 < dims.size(); ++i) CHECK(dims[i] > dims[i + 1]);
                CHECK(dims.back() == 0);
                CHECK(dual(dual(m)) == m);
                CHECK(min_generators(dual(m)) == socle_dimension(m));
                // socle by rank: n - rank of [X; Y]
                Matrix stacked(m.field(), 2 * m.length(), m.length());
                for (std::size_t i = 0; i < m.length(); ++i) {
                    for (std::size_t j = 0; j < m.length(); ++j) {
                        stacked(i, j) = m.x()(i, j);
                        stacked(m.length() + i, j) = m.y()(i, j);
                    }
                }
                CHECK(socle_dimension(m) == m.length() - rank(stacked));
            }
        }
    }
}

TEST_CASE("classify is constant on conjugacy classes") {
    std::mt19937_64 rng(4242);
    for (int p : {2, 3}) {
        const Field f = Field::prime(static_cast<std::uint64_t>(p));
        for (int n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 40; ++trial) {
                const auto m = oracle::random_presentation(rng, n, p);
                const auto g = oracle::random_invertible(rng, f, static_cast<std::size_t>(n));
                const auto a = classify(m), b = classify(oracle::conjugate(m, g));
                CAPTURE(a.name());
                CHECK(a == b);
                CHECK(a.parameter_strings() == b.parameter_strings());
                CHECK(a.generators == static_cast<int>(min_generators(m)));
            }
        }
    }
}

}  // TEST_SUITE
