#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pointmod/field.hpp"
#include "pointmod/matrix.hpp"
#include "pointmod/motive.hpp"

namespace pointmod {

/// A k[x,y]-module of length n supported at the origin, given by the action
/// of x and y on a basis: a pair of commuting nilpotent n x n matrices.
/// Instances only come out of validate(), so the invariants always hold.
class ModulePresentation {
public:
    const Matrix& x() const noexcept { return x_; }
    const Matrix& y() const noexcept { return y_; }
    std::size_t length() const noexcept { return x_.rows(); }
    const Field& field() const noexcept { return x_.field(); }

    friend bool operator==(const ModulePresentation&, const ModulePresentation&) = default;

private:
    friend ModulePresentation validate(Matrix x, Matrix y);
    ModulePresentation(Matrix x, Matrix y) : x_(std::move(x)), y_(std::move(y)) {}

    Matrix x_;
    Matrix y_;
};

/// Throws Error{ShapeMismatch | FieldMismatch | NotCommuting | NotNilpotent}.
ModulePresentation validate(Matrix x, Matrix y);
ModulePresentation zero_module(const Field& field);

/// dim M/mM.
std::size_t min_generators(const ModulePresentation& m);
/// (dim M, dim mM, dim m^2 M, ..., 0).
std::vector<std::size_t> power_dims(const ModulePresentation& m);
/// dim(ker x ∩ ker y).
std::size_t socle_dimension(const ModulePresentation& m);

struct EndAlgebra {
    std::size_t dimension = 0;
    std::vector<Matrix> basis;
};

/// Solves P X = X P, P Y = Y P.
EndAlgebra end_algebra(const ModulePresentation& m);

ModulePresentation dual(const ModulePresentation& m);
/// Throws Error{FieldMismatch}.
ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);

/// Point of P^1 normalised so that the last nonzero coordinate is 1.
class ProjectivePoint {
public:
    /// Throws Error{InvalidArgument} if both coordinates vanish.
    ProjectivePoint(FieldElement first, FieldElement second);

    const FieldElement& first() const noexcept { return first_; }
    const FieldElement& second() const noexcept { return second_; }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b);

    std::string to_string() const;

private:
    FieldElement first_;
    FieldElement second_;
};

/// a λ^2 + b λμ + c μ^2
struct BinaryQuadratic {
    FieldElement a, b, c;

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    FieldElement evaluate(const FieldElement& lambda, const FieldElement& mu) const;
    /// Scaled so that the first nonzero coefficient is 1.
    BinaryQuadratic monic() const;
    std::string to_string() const;

    friend bool operator==(const BinaryQuadratic&, const BinaryQuadratic&) = default;
};

struct PencilRoot {
    ProjectivePoint point;
    int multiplicity;
    std::size_t rank;  // rank of λ A_x + μ A_y at the root
};

struct PencilReport {
    BinaryQuadratic det_form;  // det(λ A_x + μ A_y)
    bool identically_zero = false;
    /// Nonzero form with no root over the ground field (two conjugate roots).
    bool irreducible = false;
    std::vector<PencilRoot> roots;
};

/// Invariants of the pencil λ A_x + μ A_y for 2 x 2 blocks; these are
/// unchanged (up to the induced action on [λ:μ]) under (H A_x K, H A_y K).
/// Throws Error{RankConditionViolated} unless rank [A_x A_y] = 2.
PencilReport pencil_invariants(const Matrix& ax, const Matrix& ay);

/// Annihilator of a module, as a subspace of the span of monomials of degree
/// 1..max_degree (everything of higher degree annihilates automatically).
struct IdealDescription {
    int max_degree = 0;
    /// Reduced row echelon basis; column order is monomials(max_degree).
    std::vector<std::vector<FieldElement>> rows;

    /// Degree-descending monomials, x before y within a degree: (i, j) means x^i y^j.
    static std::vector<std::pair<int, int>> monomials(int max_degree);
    std::string to_string() const;
    friend bool operator==(const IdealDescription&, const IdealDescription&) = default;
};

IdealDescription annihilator(const ModulePresentation& m);

enum class IsoKind {
    StructureSheaf,
    DualSquare,
    Points,
    F1,
    F2,
    SumOfTwoEqualLength2,
    SumOfTwoDistinctLength2,
    PointPlusLength2,
    PointPlusCurvilinear3,
    PointPlusSquare,
    PointPlusDualSquare,
    TwoPointsPlusLength2,
};

struct Summand {
    std::string name;
    int multiplicity;
    friend bool operator==(const Summand&, const Summand&) = default;
};

/// Isomorphism class of a module of length <= 4.
///
/// Continuous parameters are tangent directions [a:b] in P(m/m^2) written in
/// (x:y) coordinates: the double point with ideal (b x - a y) + m^2 has
/// direction [a:b]. Structure sheaves (and the curvilinear summand of
/// k + O_Z) carry their ideal instead.
struct IsoClassLabel {
    IsoKind kind = IsoKind::Points;
    int length = 0;
    int generators = 0;
    std::vector<ProjectivePoint> parameters;
    /// Set for O_Z + O_Z' whose two directions are conjugate over the ground field.
    std::optional<BinaryQuadratic> conjugate_pair;
    std::optional<IdealDescription> ideal;
    bool curvilinear = false;
    std::vector<Summand> summands;

    std::string name() const;
    std::vector<std::string> parameter_strings() const;
    bool is_indecomposable() const;

    friend bool operator==(const IsoClassLabel& a, const IsoClassLabel& b);
};

/// Throws Error{UnsupportedLength} for n = 0 or n > 4 and
/// Error{IrrationalParameter} over Q when two directions are irrational.
IsoClassLabel classify(const ModulePresentation& m);

/// [Aut] = L^(end_dim - sum m_i^2) prod [GL_{m_i}].
/// Throws Error{InconsistentDimensions} if end_dim < sum m_i^2.
Motive aut_motive(std::span<const int> multiplicities, std::size_t end_dim);
Motive aut_motive(const IsoClassLabel& label, std::size_t end_dim);

}  // namespace pointmod
