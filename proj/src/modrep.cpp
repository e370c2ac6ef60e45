#include "pointmod/modrep.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pointmod/error.hpp"

namespace pointmod {

namespace {

Matrix vstack(const Matrix& a, const Matrix& b) { return hstack(a.transpose(), b.transpose()).transpose(); }

Matrix columns_to_matrix(const Field& f, std::size_t n, const std::vector<std::vector<FieldElement>>& cols) {
    return Matrix::from_columns(f, n, cols);
}

// Basis P = [v_1 .. v_r | w_1 .. w_s] where w spans mM (canonical column basis
// of [X | Y]) and v extends it with the first standard vectors that raise the rank.
Matrix splitting_basis(const ModulePresentation& m, std::size_t& r_out) {
    const Field& f = m.field();
    const std::size_t n = m.length();
    auto radical = column_space_basis(hstack(m.x(), m.y()));
    std::vector<std::vector<FieldElement>> generators;
    std::vector<std::vector<FieldElement>> current = radical;
    for (std::size_t j = 0; j < n && current.size() < n; ++j) {
        std::vector<FieldElement> e(n, FieldElement(f, 0));
        e[j] = FieldElement(f, 1);
        auto trial = current;
        trial.push_back(e);
        if (rank(columns_to_matrix(f, n, trial)) == trial.size()) {
            current = std::move(trial);
            generators.push_back(std::move(e));
        }
    }
    r_out = generators.size();
    auto cols = generators;
    cols.insert(cols.end(), radical.begin(), radical.end());
    return columns_to_matrix(f, n, cols);
}

// [a:b] with a*X + b*Y vanishing on span(subspace), returned as the tangent
// direction [b:-a]. The solution space must be a line.
ProjectivePoint annihilating_direction(const ModulePresentation& m, const std::vector<std::vector<FieldElement>>& subspace) {
    const Field& f = m.field();
    const std::size_t n = m.length();
    Matrix system(f, n * subspace.size(), 2);
    for (std::size_t s = 0; s < subspace.size(); ++s) {
        auto xs = m.x().apply(subspace[s]);
        auto ys = m.y().apply(subspace[s]);
        for (std::size_t i = 0; i < n; ++i) {
            system(s * n + i, 0) = xs[i];
            system(s * n + i, 1) = ys[i];
        }
    }
    auto kernel = nullspace(system);
    if (kernel.size() != 1) throw std::logic_error("expected a unique annihilating linear form");
    return ProjectivePoint(kernel[0][1], -kernel[0][0]);
}

std::vector<std::vector<FieldElement>> standard_basis(const Field& f, std::size_t n) {
    std::vector<std::vector<FieldElement>> out;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<FieldElement> e(n, FieldElement(f, 0));
        e[j] = FieldElement(f, 1);
        out.push_back(std::move(e));
    }
    return out;
}

// Root [λ:μ] of the pencil -> direction [μ:-λ] of the corresponding double point.
ProjectivePoint root_to_direction(const ProjectivePoint& root) { return ProjectivePoint(root.second(), -root.first()); }

std::string monomial_string(int i, int j) {
    std::string s;
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) s += j == 1 ? "y" : "y^" + std::to_string(j);
    return s.empty() ? "1" : s;
}

}  // namespace

ModulePresentation validate(Matrix x, Matrix y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
        throw Error(ErrorCode::ShapeMismatch, "x and y must be square matrices of the same size");
    }
    if (!(x.field() == y.field())) throw Error(ErrorCode::FieldMismatch, "x and y are over different fields");
    if (!(x * y == y * x)) throw Error(ErrorCode::NotCommuting, "x and y do not commute");
    const auto n = static_cast<unsigned>(x.rows());
    if (!x.pow(n).is_zero()) throw Error(ErrorCode::NotNilpotent, "x is not nilpotent");
    if (!y.pow(n).is_zero()) throw Error(ErrorCode::NotNilpotent, "y is not nilpotent");
    return ModulePresentation(std::move(x), std::move(y));
}

ModulePresentation zero_module(const Field& field) { return validate(Matrix(field, 0, 0), Matrix(field, 0, 0)); }

std::size_t min_generators(const ModulePresentation& m) { return m.length() - rank(hstack(m.x(), m.y())); }

std::vector<std::size_t> power_dims(const ModulePresentation& m) {
    const Field& f = m.field();
    const std::size_t n = m.length();
    std::vector<std::size_t> dims{n};
    auto current = standard_basis(f, n);
    while (!current.empty()) {
        Matrix basis = columns_to_matrix(f, n, current);
        current = column_space_basis(hstack(m.x() * basis, m.y() * basis));
        dims.push_back(current.size());
    }
    return dims;
}

std::size_t socle_dimension(const ModulePresentation& m) {
    if (m.length() == 0) return 0;
    return nullspace(vstack(m.x(), m.y())).size();
}

EndAlgebra end_algebra(const ModulePresentation& m) {
    const Field& f = m.field();
    const std::size_t n = m.length();
    const std::size_t unknowns = n * n;
    Matrix system(f, 2 * unknowns, unknowns);
    const Matrix* actions[2] = {&m.x(), &m.y()};
    for (std::size_t which = 0; which < 2; ++which) {
        const Matrix& a = *actions[which];
        // (P A - A P)_{ij} = sum_k P_{ik} A_{kj} - A_{ik} P_{kj}
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = which * unknowns + i * n + j;
                for (std::size_t k = 0; k < n; ++k) {
                    system(row, i * n + k) += a(k, j);
                    system(row, k * n + j) -= a(i, k);
                }
            }
        }
    }
    EndAlgebra out;
    for (const auto& v : nullspace(system)) {
        Matrix p(f, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) p(i, j) = v[i * n + j];
        }
        out.basis.push_back(std::move(p));
    }
    out.dimension = out.basis.size();
    return out;
}

ModulePresentation dual(const ModulePresentation& m) { return validate(m.x().transpose(), m.y().transpose()); }

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorCode::FieldMismatch, "direct sum of modules over " + a.field().to_string() + " and " +
                                                  b.field().to_string());
    }
    return validate(block_diagonal(a.x(), b.x()), block_diagonal(a.y(), b.y()));
}

// ---------------------------------------------------------------------------

ProjectivePoint::ProjectivePoint(FieldElement first, FieldElement second)
    : first_(std::move(first)), second_(std::move(second)) {
    if (!second_.is_zero()) {
        first_ /= second_;
        second_ = FieldElement(second_.field(), 1);
    } else if (!first_.is_zero()) {
        first_ = FieldElement(first_.field(), 1);
    } else {
        throw Error(ErrorCode::InvalidArgument, "projective point with both coordinates zero");
    }
}

std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (auto c = a.first_ <=> b.first_; c != 0) return c;
    return a.second_ <=> b.second_;
}

std::string ProjectivePoint::to_string() const { return "[" + first_.to_string() + ":" + second_.to_string() + "]"; }

FieldElement BinaryQuadratic::evaluate(const FieldElement& lambda, const FieldElement& mu) const {
    return a * lambda * lambda + b * lambda * mu + c * mu * mu;
}

BinaryQuadratic BinaryQuadratic::monic() const {
    const FieldElement& lead = !a.is_zero() ? a : (!b.is_zero() ? b : c);
    if (lead.is_zero()) return *this;
    FieldElement inv = lead.inverse();
    return {a * inv, b * inv, c * inv};
}

std::string BinaryQuadratic::to_string() const {
    std::string s;
    auto term = [&s](const FieldElement& coeff, const char* mono) {
        if (coeff.is_zero()) return;
        if (!s.empty()) s += " + ";
        if (!coeff.is_one() || *mono == '\0') s += coeff.to_string();
        if (!coeff.is_one() && *mono != '\0') s += "*";
        s += mono;
    };
    term(a, "a^2");
    term(b, "a*b");
    term(c, "b^2");
    return s.empty() ? "0" : s;
}

PencilReport pencil_invariants(const Matrix& ax, const Matrix& ay) {
    if (ax.rows() != 2 || ax.cols() != 2 || ay.rows() != 2 || ay.cols() != 2) {
        throw Error(ErrorCode::ShapeMismatch, "pencil blocks must be 2 x 2");
    }
    if (!(ax.field() == ay.field())) throw Error(ErrorCode::FieldMismatch, "pencil blocks over different fields");
    if (rank(hstack(ax, ay)) != 2) throw Error(ErrorCode::RankConditionViolated, "rank [A_x A_y] must be 2");
    const Field& f = ax.field();

    PencilReport report;
    report.det_form = {determinant(ax), ax(0, 0) * ay(1, 1) + ax(1, 1) * ay(0, 0) - ax(0, 1) * ay(1, 0) - ax(1, 0) * ay(0, 1),
                       determinant(ay)};
    const BinaryQuadratic& q = report.det_form;
    if (q.is_zero()) {
        report.identically_zero = true;
        return report;
    }

    std::vector<ProjectivePoint> zeros;
    bool double_root = false;
    const FieldElement zero(f, 0), one(f, 1);
    if (f.is_prime()) {
        for (std::uint64_t t = 0; t < f.p; ++t) {
            FieldElement lambda(f, static_cast<long>(t));
            if (q.evaluate(lambda, one).is_zero()) zeros.emplace_back(lambda, one);
        }
        if (q.evaluate(one, zero).is_zero()) zeros.emplace_back(one, zero);
        double_root = zeros.size() == 1;
    } else if (q.a.is_zero()) {
        // μ (b λ + c μ)
        zeros.emplace_back(one, zero);
        if (q.b.is_zero()) {
            double_root = true;
        } else {
            zeros.emplace_back(-q.c, q.b);
        }
    } else {
        FieldElement disc = q.b * q.b - FieldElement(f, 4) * q.a * q.c;
        FieldElement two_a = FieldElement(f, 2) * q.a;
        FieldElement s;
        if (disc.is_zero()) {
            zeros.emplace_back(-q.b, two_a);
            double_root = true;
        } else if (field_sqrt(disc, s)) {
            zeros.emplace_back(-q.b + s, two_a);
            zeros.emplace_back(-q.b - s, two_a);
        }
    }

    if (zeros.empty()) {
        report.irreducible = true;
        return report;
    }
    std::sort(zeros.begin(), zeros.end());
    for (const auto& z : zeros) {
        Matrix member = z.first() * ax + z.second() * ay;
        report.roots.push_back({z, double_root ? 2 : 1, rank(member)});
    }
    return report;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> IdealDescription::monomials(int max_degree) {
    std::vector<std::pair<int, int>> out;
    for (int d = max_degree; d >= 1; --d) {
        for (int i = d; i >= 0; --i) out.emplace_back(i, d - i);
    }
    return out;
}

std::string IdealDescription::to_string() const {
    const auto monos = monomials(max_degree);
    // Smallest d with every monomial of degree >= d in the ideal; m^(max_degree+1) always is.
    int cut = max_degree + 1;
    for (int d = max_degree; d >= 1; --d) {
        bool all = true;
        for (std::size_t k = 0; k < monos.size() && all; ++k) {
            if (monos[k].first + monos[k].second != d) continue;
            bool found = false;
            for (const auto& row : rows) {
                std::size_t nonzero = 0;
                for (const auto& c : row) nonzero += c.is_zero() ? 0 : 1;
                if (nonzero == 1 && !row[k].is_zero()) found = true;
            }
            all = found;
        }
        if (!all) break;
        cut = d;
    }
    // single-monomial rows, used to drop multiples of a monomial generator
    auto lone_monomial = [&](const std::vector<FieldElement>& row) -> std::optional<std::pair<int, int>> {
        std::optional<std::pair<int, int>> found;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k].is_zero()) continue;
            if (found) return std::nullopt;
            found = monos[k];
        }
        return found;
    };
    std::vector<std::string> gens;
    for (const auto& row : rows) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (monos[lead].first + monos[lead].second >= cut) continue;
        if (auto mono = lone_monomial(row)) {
            bool redundant = false;
            for (const auto& other : rows) {
                auto g = lone_monomial(other);
                if (g && *g != *mono && g->first <= mono->first && g->second <= mono->second) redundant = true;
            }
            if (redundant) continue;
        }
        std::string s;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k].is_zero()) continue;
            std::string coeff = row[k].to_string();
            bool negative = !coeff.empty() && coeff[0] == '-';
            if (negative) coeff = coeff.substr(1);
            if (s.empty()) {
                s += negative ? "-" : "";
            } else {
                s += negative ? " - " : " + ";
            }
            if (coeff != "1") s += coeff;
            s += monomial_string(monos[k].first, monos[k].second);
        }
        gens.push_back(s);
    }
    std::string power = cut == 1 ? "m" : "m^" + std::to_string(cut);
    if (gens.empty()) return "A/" + power;
    std::string out = "A/(";
    for (const auto& g : gens) out += g + ", ";
    return out + power + ")";
}

IdealDescription annihilator(const ModulePresentation& m) {
    const Field& f = m.field();
    const std::size_t n = m.length();
    IdealDescription out;
    out.max_degree = static_cast<int>(n) - 1;
    const auto monos = IdealDescription::monomials(out.max_degree);
    if (monos.empty()) return out;
    Matrix evaluation(f, n * n, monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) {
        Matrix value = m.x().pow(static_cast<unsigned>(monos[k].first)) * m.y().pow(static_cast<unsigned>(monos[k].second));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) evaluation(i * n + j, k) = value(i, j);
        }
    }
    auto kernel = nullspace(evaluation);
    if (kernel.empty()) return out;
    Matrix rows(f, kernel.size(), monos.size());
    for (std::size_t r = 0; r < kernel.size(); ++r) {
        for (std::size_t k = 0; k < monos.size(); ++k) rows(r, k) = kernel[r][k];
    }
    RowEchelon e = rref(rows);
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
        std::vector<FieldElement> row;
        for (std::size_t k = 0; k < monos.size(); ++k) row.push_back(e.reduced(r, k));
        out.rows.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string IsoClassLabel::name() const {
    switch (kind) {
        case IsoKind::StructureSheaf:
            return "structure sheaf: " + (ideal ? ideal->to_string() : std::string("O_Z"));
        case IsoKind::DualSquare: return "(A/m^2)^*";
        case IsoKind::Points: return length == 1 ? "k" : "k^" + std::to_string(length);
        case IsoKind::F1: return "F1";
        case IsoKind::F2: return "F2";
        case IsoKind::SumOfTwoEqualLength2: return "O_Z + O_Z";
        case IsoKind::SumOfTwoDistinctLength2: return "O_Z + O_Z'";
        case IsoKind::PointPlusLength2: return "k + O_Z";
        case IsoKind::PointPlusCurvilinear3: return "k + O_Z (curvilinear, length 3)";
        case IsoKind::PointPlusSquare: return "k + A/m^2";
        case IsoKind::PointPlusDualSquare: return "k + (A/m^2)^*";
        case IsoKind::TwoPointsPlusLength2: return "k^2 + O_Z";
    }
    return "?";
}

std::vector<std::string> IsoClassLabel::parameter_strings() const {
    std::vector<std::string> out;
    for (const auto& p : parameters) out.push_back(p.to_string());
    if (conjugate_pair) out.push_back("roots of " + conjugate_pair->to_string());
    if (ideal && kind == IsoKind::PointPlusCurvilinear3) out.push_back(ideal->to_string());
    return out;
}

bool IsoClassLabel::is_indecomposable() const {
    return summands.size() == 1 && summands.front().multiplicity == 1 &&
           !(kind == IsoKind::Points && length > 1);
}

bool operator==(const IsoClassLabel& a, const IsoClassLabel& b) {
    return a.kind == b.kind && a.length == b.length && a.parameters == b.parameters &&
           a.conjugate_pair == b.conjugate_pair && a.ideal == b.ideal;
}

namespace {

IsoClassLabel make_label(IsoKind kind, const ModulePresentation& m, std::size_t r, std::vector<Summand> summands) {
    IsoClassLabel label;
    label.kind = kind;
    label.length = static_cast<int>(m.length());
    label.generators = static_cast<int>(r);
    label.summands = std::move(summands);
    return label;
}

IsoClassLabel classify_pencil_case(const ModulePresentation& m, std::size_t r) {
    std::size_t gens = 0;
    Matrix basis = splitting_basis(m, gens);
    Matrix inv = inverse(basis);
    Matrix x = inv * m.x() * basis;
    Matrix y = inv * m.y() * basis;
    const Field& f = m.field();
    Matrix ax(f, 2, 2), ay(f, 2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            ax(i, j) = x(2 + i, j);
            ay(i, j) = y(2 + i, j);
        }
    }
    PencilReport pencil = pencil_invariants(ax, ay);
    if (pencil.identically_zero) return make_label(IsoKind::PointPlusSquare, m, r, {{"k", 1}, {"A/m^2", 1}});
    if (pencil.irreducible) {
        const BinaryQuadratic& q = pencil.det_form;
        if (!f.is_prime()) {
            throw Error(ErrorCode::IrrationalParameter,
                        "O_Z + O_Z' with directions conjugate over Q; pencil determinant " + q.to_string());
        }
        IsoClassLabel label = make_label(IsoKind::SumOfTwoDistinctLength2, m, r, {{"O_Z + O_Z' (conjugate pair)", 1}});
        // Same form rewritten in direction coordinates [μ:-λ].
        label.conjugate_pair = BinaryQuadratic{q.c, -q.b, q.a}.monic();
        return label;
    }
    if (pencil.roots.size() == 2) {
        IsoClassLabel label = make_label(IsoKind::SumOfTwoDistinctLength2, m, r, {{"O_Z", 1}, {"O_Z'", 1}});
        label.parameters = {root_to_direction(pencil.roots[0].point), root_to_direction(pencil.roots[1].point)};
        std::sort(label.parameters.begin(), label.parameters.end());
        return label;
    }
    const PencilRoot& root = pencil.roots.front();
    IsoClassLabel label = root.rank == 0 ? make_label(IsoKind::SumOfTwoEqualLength2, m, r, {{"O_Z", 2}})
                                         : make_label(IsoKind::F2, m, r, {{"F2", 1}});
    label.parameters = {root_to_direction(root.point)};
    return label;
}

}  // namespace

IsoClassLabel classify(const ModulePresentation& m) {
    const std::size_t n = m.length();
    if (n == 0 || n > 4) {
        throw Error(ErrorCode::UnsupportedLength, "classification covers lengths 1..4, got " + std::to_string(n));
    }
    const std::size_t r = min_generators(m);
    const auto dims = power_dims(m);
    const int ni = static_cast<int>(n);

    if (r == n) return make_label(IsoKind::Points, m, r, {{"k", ni}});

    if (r == 1) {
        IsoClassLabel label = make_label(IsoKind::StructureSheaf, m, r, {{"O_Z", 1}});
        label.ideal = annihilator(m);
        label.curvilinear = dims.size() == n + 1;
        if (n == 2) label.parameters = {annihilating_direction(m, standard_basis(m.field(), n))};
        return label;
    }

    const std::size_t end_dim = end_algebra(m).dimension;
    const auto everything = standard_basis(m.field(), n);

    if (n == 3) {  // r == 2
        if (end_dim == 3) return make_label(IsoKind::DualSquare, m, r, {{"(A/m^2)^*", 1}});
        if (end_dim == 5) {
            IsoClassLabel label = make_label(IsoKind::PointPlusLength2, m, r, {{"k", 1}, {"O_Z", 1}});
            label.parameters = {annihilating_direction(m, everything)};
            return label;
        }
        throw std::logic_error("length 3, r = 2 module with endomorphism dimension " + std::to_string(end_dim));
    }

    // n == 4
    if (r == 3) {
        if (end_dim == 7) return make_label(IsoKind::PointPlusDualSquare, m, r, {{"k", 1}, {"(A/m^2)^*", 1}});
        IsoClassLabel label = make_label(IsoKind::TwoPointsPlusLength2, m, r, {{"k", 2}, {"O_Z", 1}});
        label.parameters = {annihilating_direction(m, everything)};
        return label;
    }

    // r == 2: split on whether mM is a structure sheaf (m^2 M != 0) or k + k.
    if (dims[2] > 0) {
        if (end_dim == 4) {
            IsoClassLabel label = make_label(IsoKind::F1, m, r, {{"F1", 1}});
            auto radical = column_space_basis(hstack(m.x(), m.y()));
            label.parameters = {annihilating_direction(m, radical)};
            return label;
        }
        IsoClassLabel label = make_label(IsoKind::PointPlusCurvilinear3, m, r, {{"k", 1}, {"O_Z", 1}});
        label.ideal = annihilator(m);
        return label;
    }
    return classify_pencil_case(m, r);
}

Motive aut_motive(std::span<const int> multiplicities, std::size_t end_dim) {
    long squares = 0;
    Motive reductive(1);
    for (int mult : multiplicities) {
        if (mult < 1) throw Error(ErrorCode::InvalidArgument, "summand multiplicities must be positive");
        squares += static_cast<long>(mult) * mult;
        reductive *= gl_class(mult);
    }
    if (static_cast<long>(end_dim) < squares) {
        throw Error(ErrorCode::InconsistentDimensions, "endomorphism dimension " + std::to_string(end_dim) +
                                                           " below sum of squared multiplicities " +
                                                           std::to_string(squares));
    }
    return Motive::L_power(static_cast<int>(static_cast<long>(end_dim) - squares)) * reductive;
}

Motive aut_motive(const IsoClassLabel& label, std::size_t end_dim) {
    if (label.conjugate_pair) {
        // Units of a quadratic extension: a non-split torus of class L^2 - 1.
        if (end_dim < 2) throw Error(ErrorCode::InconsistentDimensions, "endomorphism dimension below 2");
        return Motive::L_power(static_cast<int>(end_dim) - 2) * (Motive::L_power(2) - Motive(1));
    }
    std::vector<int> mults;
    for (const auto& s : label.summands) mults.push_back(s.multiplicity);
    return aut_motive(mults, end_dim);
}

}  // namespace pointmod
