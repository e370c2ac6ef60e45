#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pointmod/matrix.hpp"
#include "pointmod/modrep.hpp"

namespace pointmod {

/// Small dense matrix over F_p (n <= 4, p < 256), entries row-major in [0, p).
/// Independent of Matrix/FieldElement on purpose: this is the oracle side.
class PrimeFieldMatrix {
public:
    static constexpr std::size_t kMaxSize = 4;

    PrimeFieldMatrix() = default;
    /// Zero matrix. Throws Error{InvalidArgument} unless n <= 4 and p is a prime below 256.
    PrimeFieldMatrix(std::uint32_t p, std::size_t n);

    static PrimeFieldMatrix identity(std::uint32_t p, std::size_t n);
    /// Matrix whose row-major entries are the base-p digits of index (least significant first).
    static PrimeFieldMatrix from_index(std::uint32_t p, std::size_t n, std::uint64_t index);
    /// Throws Error{FieldMismatch} unless m is over a prime field.
    static PrimeFieldMatrix from_matrix(const Matrix& m);

    Matrix to_matrix() const;
    std::uint64_t index() const;

    std::uint32_t p() const noexcept { return p_; }
    std::size_t n() const noexcept { return n_; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return e_[i * kMaxSize + j]; }
    void set(std::size_t i, std::size_t j, std::uint32_t v) { e_[i * kMaxSize + j] = static_cast<std::uint8_t>(v % p_); }

    bool is_zero() const;
    bool is_nilpotent() const;
    std::uint32_t determinant() const;
    bool is_invertible() const { return determinant() != 0; }

    PrimeFieldMatrix& operator+=(const PrimeFieldMatrix& rhs);
    friend PrimeFieldMatrix operator+(PrimeFieldMatrix a, const PrimeFieldMatrix& b) { return a += b; }
    friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
    friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;
    friend auto operator<=>(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

private:
    std::uint32_t p_ = 2;
    std::size_t n_ = 0;
    std::array<std::uint8_t, kMaxSize * kMaxSize> e_{};
};

struct OracleOptions {
    unsigned threads = 1;
    /// Cap on enumerated candidates (matrices or group elements); exceeding it
    /// throws Error{ResourceBudgetExceeded} rather than returning a partial count.
    std::uint64_t budget = 4'000'000'000ULL;
};

/// prod_{i<n} (q^n - q^i)
mpz_class gl_order(unsigned n, std::uint64_t q);

/// All invertible n x n matrices over F_p, in index order.
std::vector<PrimeFieldMatrix> enumerate_gl(std::size_t n, std::uint32_t p, std::uint64_t budget = 4'000'000'000ULL);

/// Basis of {P : P A = A P for every A in mats}.
std::vector<PrimeFieldMatrix> centralizer_basis(const std::vector<PrimeFieldMatrix>& mats, std::uint32_t p, std::size_t n);

std::uint64_t count_commuting_nilpotent_pairs(std::size_t n, std::uint32_t q, const OracleOptions& opts = {});
std::uint64_t count_commuting_pairs(std::size_t n, std::uint32_t q, const OracleOptions& opts = {});

/// Exhaustive search for g in GL_n(F_p) with g X = X' g and g Y = Y' g.
bool orbit_equivalent(const ModulePresentation& a, const ModulePresentation& b, const OracleOptions& opts = {});

/// Lexicographically least (g X g^-1, g Y g^-1) over GL_n(F_p): equal for two
/// presentations iff they are simultaneously conjugate.
std::pair<PrimeFieldMatrix, PrimeFieldMatrix> orbit_canonical_form(const ModulePresentation& m,
                                                                   const OracleOptions& opts = {});

/// Number of invertible endomorphisms, by enumerating End(M) over F_p.
std::uint64_t count_aut_points(const ModulePresentation& m, const OracleOptions& opts = {});

}  // namespace pointmod
