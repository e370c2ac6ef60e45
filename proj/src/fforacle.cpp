#include "pointmod/fforacle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "pointmod/error.hpp"

namespace pointmod {

namespace {

using Row = std::vector<std::uint32_t>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1U) r = r * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return r;
}

// Nullspace basis of a system over F_p, one vector per free column.
std::vector<Row> nullspace_mod(std::vector<Row> rows, std::size_t cols, std::uint32_t p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const std::uint32_t inv = inverse_mod(rows[r][c], p);
        for (auto& v : rows[r]) v = v * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const std::uint32_t f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - rows[i][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

void check_prime_small(std::uint32_t p) {
    bool prime = p >= 2;
    for (std::uint32_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (!prime || p >= 256) throw Error(ErrorCode::InvalidArgument, "oracle fields are F_p with p a prime below 256");
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) throw Error(ErrorCode::ResourceBudgetExceeded, "enumeration size overflows");
        r *= base;
    }
    return r;
}

// Sums f(begin, end) over contiguous chunks of [0, total). The split is fixed
// by `total` alone, so the result does not depend on the thread count.
template <class F>
std::uint64_t parallel_sum(std::uint64_t total, unsigned threads, F f) {
    constexpr std::uint64_t kChunks = 64;
    const std::uint64_t chunk = std::max<std::uint64_t>(1, (total + kChunks - 1) / kChunks);
    const std::uint64_t count = (total + chunk - 1) / chunk;
    std::vector<std::uint64_t> partial(count, 0);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t k = next.fetch_add(1);
            if (k >= count || stop.load()) return;
            try {
                partial[k] = f(k * chunk, std::min(total, (k + 1) * chunk));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                stop = true;
                return;
            }
        }
    };
    const unsigned n_threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    std::uint64_t sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

class Budget {
public:
    explicit Budget(std::uint64_t cap) : cap_(cap) {}
    void charge(std::uint64_t amount) {
        if (used_.fetch_add(amount) + amount > cap_) {
            throw Error(ErrorCode::ResourceBudgetExceeded,
                        "oracle budget of " + std::to_string(cap_) + " enumerated candidates exceeded");
        }
    }

private:
    std::uint64_t cap_;
    std::atomic<std::uint64_t> used_{0};
};

// Visits every F_p-combination of the basis (odometer; each step adds one basis element).
template <class F>
void for_each_point(const std::vector<PrimeFieldMatrix>& basis, std::uint32_t p, std::size_t n, F visit) {
    PrimeFieldMatrix current(p, n);
    std::vector<std::uint32_t> digits(basis.size(), 0);
    for (;;) {
        visit(current);
        std::size_t i = 0;
        for (; i < basis.size(); ++i) {
            current += basis[i];
            if (++digits[i] < p) break;
            digits[i] = 0;  // p additions of basis[i] cancel
        }
        if (i == basis.size()) return;
    }
}

struct GroupTable {
    std::vector<PrimeFieldMatrix> elements;
    std::vector<PrimeFieldMatrix> inverses;
};

PrimeFieldMatrix inverse_of(const PrimeFieldMatrix& g) {
    const std::uint32_t p = g.p();
    const std::size_t n = g.n();
    std::vector<Row> rows(n, Row(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = g(i, j);
        rows[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && rows[piv][c] == 0) ++piv;
        if (piv == n) throw Error(ErrorCode::DivisionByZero, "singular matrix over F_p");
        std::swap(rows[piv], rows[c]);
        const std::uint32_t inv = inverse_mod(rows[c][c], p);
        for (auto& v : rows[c]) v = v * inv % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || rows[i][c] == 0) continue;
            const std::uint32_t f = rows[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[c][j]) % p;
        }
    }
    PrimeFieldMatrix out(p, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, rows[i][n + j]);
    }
    return out;
}

std::shared_ptr<const GroupTable> group_table(std::size_t n, std::uint32_t p, std::uint64_t budget) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::uint32_t>, std::shared_ptr<const GroupTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({n, p});
        if (it != cache.end()) {
            if (it->second->elements.size() > budget) {
                throw Error(ErrorCode::ResourceBudgetExceeded, "general linear group larger than the oracle budget");
            }
            return it->second;
        }
    }
    auto table = std::make_shared<GroupTable>();
    table->elements = enumerate_gl(n, p, budget);
    table->inverses.reserve(table->elements.size());
    for (const auto& g : table->elements) table->inverses.push_back(inverse_of(g));
    std::lock_guard<std::mutex> lock(mutex);
    // Keep only tables of modest size (GL_4(F_2) has 20160 elements).
    if (table->elements.size() <= 1'000'000) cache[{n, p}] = table;
    return table;
}

std::pair<PrimeFieldMatrix, PrimeFieldMatrix> to_oracle(const ModulePresentation& m) {
    if (!m.field().is_prime()) throw Error(ErrorCode::FieldMismatch, "orbit oracle needs a prime field");
    return {PrimeFieldMatrix::from_matrix(m.x()), PrimeFieldMatrix::from_matrix(m.y())};
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(std::uint32_t p, std::size_t n) : p_(p), n_(n) {
    check_prime_small(p);
    if (n > kMaxSize) throw Error(ErrorCode::InvalidArgument, "oracle matrices have size at most 4");
}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::uint32_t p, std::size_t n) {
    PrimeFieldMatrix m(p, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

PrimeFieldMatrix PrimeFieldMatrix::from_index(std::uint32_t p, std::size_t n, std::uint64_t index) {
    PrimeFieldMatrix m(p, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, static_cast<std::uint32_t>(index % p));
            index /= p;
        }
    }
    return m;
}

std::uint64_t PrimeFieldMatrix::index() const {
    std::uint64_t out = 0;
    for (std::size_t k = n_ * n_; k-- > 0;) out = out * p_ + (*this)(k / n_, k % n_);
    return out;
}

PrimeFieldMatrix PrimeFieldMatrix::from_matrix(const Matrix& m) {
    if (!m.field().is_prime()) throw Error(ErrorCode::FieldMismatch, "expected a matrix over a prime field");
    if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "expected a square matrix");
    PrimeFieldMatrix out(static_cast<std::uint32_t>(m.field().p), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, static_cast<std::uint32_t>(m(i, j).residue()));
    }
    return out;
}

Matrix PrimeFieldMatrix::to_matrix() const {
    const Field f = Field::prime(p_);
    Matrix m(f, n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = FieldElement(f, static_cast<long>((*this)(i, j)));
    }
    return m;
}

bool PrimeFieldMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint8_t v) { return v == 0; });
}

bool PrimeFieldMatrix::is_nilpotent() const {
    // X^(2^k) with 2^k >= n
    PrimeFieldMatrix power = *this;
    for (std::size_t reach = 1; reach < n_; reach *= 2) power = power * power;
    return power.is_zero();
}

std::uint32_t PrimeFieldMatrix::determinant() const {
    std::uint32_t a[kMaxSize][kMaxSize];
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) a[i][j] = (*this)(i, j);
    }
    std::uint32_t det = 1;
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t piv = c;
        while (piv < n_ && a[piv][c] == 0) ++piv;
        if (piv == n_) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv][j], a[c][j]);
            det = (p_ - det) % p_;
        }
        det = det * a[c][c] % p_;
        const std::uint32_t inv = inverse_mod(a[c][c], p_);
        for (std::size_t i = c + 1; i < n_; ++i) {
            if (a[i][c] == 0) continue;
            const std::uint32_t f = a[i][c] * inv % p_;
            for (std::size_t j = c; j < n_; ++j) a[i][j] = (a[i][j] + (p_ - f) * a[c][j]) % p_;
        }
    }
    return det;
}

PrimeFieldMatrix& PrimeFieldMatrix::operator+=(const PrimeFieldMatrix& rhs) {
    for (std::size_t k = 0; k < e_.size(); ++k) {
        const std::uint32_t s = static_cast<std::uint32_t>(e_[k]) + rhs.e_[k];
        e_[k] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
    }
    return *this;
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    PrimeFieldMatrix out(a.p_, a.n_);
    const std::size_t n = a.n_;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t s = 0;
            for (std::size_t k = 0; k < n; ++k) s += static_cast<std::uint32_t>(a(i, k)) * b(k, j);
            out.e_[i * PrimeFieldMatrix::kMaxSize + j] = static_cast<std::uint8_t>(s % a.p_);
        }
    }
    return out;
}

mpz_class gl_order(unsigned n, std::uint64_t q) {
    mpz_class qn, out = 1;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    for (unsigned i = 0; i < n; ++i) {
        mpz_class qi;
        mpz_ui_pow_ui(qi.get_mpz_t(), q, i);
        out *= qn - qi;
    }
    return out;
}

std::vector<PrimeFieldMatrix> enumerate_gl(std::size_t n, std::uint32_t p, std::uint64_t budget) {
    check_prime_small(p);
    const std::uint64_t total = checked_pow(p, n * n);
    if (total > budget) throw Error(ErrorCode::ResourceBudgetExceeded, "matrix space larger than the oracle budget");
    std::vector<PrimeFieldMatrix> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto g = PrimeFieldMatrix::from_index(p, n, idx);
        if (g.is_invertible()) out.push_back(g);
    }
    return out;
}

std::vector<PrimeFieldMatrix> centralizer_basis(const std::vector<PrimeFieldMatrix>& mats, std::uint32_t p, std::size_t n) {
    const std::size_t unknowns = n * n;
    std::vector<Row> rows;
    for (const auto& a : mats) {
        // (P A - A P)_{ij} = sum_k P_{ik} A_{kj} - A_{ik} P_{kj}
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Row row(unknowns, 0);
                for (std::size_t k = 0; k < n; ++k) {
                    row[i * n + k] = (row[i * n + k] + a(k, j)) % p;
                    row[k * n + j] = (row[k * n + j] + p - a(i, k)) % p;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    std::vector<PrimeFieldMatrix> basis;
    for (const auto& v : nullspace_mod(std::move(rows), unknowns, p)) {
        PrimeFieldMatrix m(p, n);
        for (std::size_t k = 0; k < unknowns; ++k) m.set(k / n, k % n, v[k]);
        basis.push_back(m);
    }
    return basis;
}

namespace {

std::uint64_t count_pairs(std::size_t n, std::uint32_t q, const OracleOptions& opts, bool nilpotent) {
    check_prime_small(q);
    if (n == 0 || n > PrimeFieldMatrix::kMaxSize) {
        throw Error(ErrorCode::InvalidArgument, "pair counting supports 1 <= n <= 4");
    }
    const std::uint64_t total = checked_pow(q, n * n);
    Budget budget(opts.budget);
    budget.charge(total);
    return parallel_sum(total, opts.threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t count = 0;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const auto x = PrimeFieldMatrix::from_index(q, n, idx);
            if (nilpotent && !x.is_nilpotent()) continue;
            const auto basis = centralizer_basis({x}, q, n);
            budget.charge(checked_pow(q, basis.size()));
            if (!nilpotent) {
                count += checked_pow(q, basis.size());
                continue;
            }
            for_each_point(basis, q, n, [&](const PrimeFieldMatrix& y) {
                if (y.is_nilpotent()) ++count;
            });
        }
        return count;
    });
}

}  // namespace

std::uint64_t count_commuting_nilpotent_pairs(std::size_t n, std::uint32_t q, const OracleOptions& opts) {
    return count_pairs(n, q, opts, true);
}

std::uint64_t count_commuting_pairs(std::size_t n, std::uint32_t q, const OracleOptions& opts) {
    return count_pairs(n, q, opts, false);
}

bool orbit_equivalent(const ModulePresentation& a, const ModulePresentation& b, const OracleOptions& opts) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "presentations over different fields");
    if (a.length() != b.length()) return false;
    if (a.length() == 0) return true;
    const auto [x, y] = to_oracle(a);
    const auto [x2, y2] = to_oracle(b);
    auto table = group_table(a.length(), x.p(), opts.budget);
    const auto& gs = table->elements;
    std::atomic<bool> found{false};
    parallel_sum(gs.size(), opts.threads, [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
        for (std::uint64_t k = begin; k < end && !found.load(std::memory_order_relaxed); ++k) {
            const auto& g = gs[k];
            if (g * x == x2 * g && g * y == y2 * g) {
                found = true;
                return 1;
            }
        }
        return 0;
    });
    return found.load();
}

std::pair<PrimeFieldMatrix, PrimeFieldMatrix> orbit_canonical_form(const ModulePresentation& m, const OracleOptions& opts) {
    const auto [x, y] = to_oracle(m);
    if (m.length() == 0) return {x, y};
    auto table = group_table(m.length(), x.p(), opts.budget);
    std::pair<PrimeFieldMatrix, PrimeFieldMatrix> best{x, y};
    for (std::size_t k = 0; k < table->elements.size(); ++k) {
        const auto& g = table->elements[k];
        const auto& gi = table->inverses[k];
        PrimeFieldMatrix cx = g * x * gi;
        if (best.first < cx) continue;
        std::pair<PrimeFieldMatrix, PrimeFieldMatrix> candidate{cx, g * y * gi};
        if (candidate < best) best = candidate;
    }
    return best;
}

std::uint64_t count_aut_points(const ModulePresentation& m, const OracleOptions& opts) {
    const auto [x, y] = to_oracle(m);
    const std::size_t n = m.length();
    if (n == 0) return 1;
    const auto basis = centralizer_basis({x, y}, x.p(), n);
    Budget budget(opts.budget);
    budget.charge(checked_pow(x.p(), basis.size()));
    std::uint64_t count = 0;
    for_each_point(basis, x.p(), n, [&](const PrimeFieldMatrix& e) {
        if (e.is_invertible()) ++count;
    });
    return count;
}

}  // namespace pointmod
