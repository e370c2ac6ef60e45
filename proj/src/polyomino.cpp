#include "pointmod/polyomino.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pointmod/error.hpp"

namespace pointmod {

namespace {

void check_area(int area, int cap) {
    if (area < 1) throw Error(ErrorCode::InvalidArgument, "area must be positive");
    if (area > cap) {
        throw Error(ErrorCode::CapExceeded, "area " + std::to_string(area) + " exceeds the cap " + std::to_string(cap));
    }
}

// Grows diagrams upward. `corner` also admits rows meeting the previous one at a corner.
void grow(std::vector<RowInterval>& rows, int remaining, bool corner, const std::function<void(const std::vector<RowInterval>&)>& emit) {
    if (remaining == 0) {
        emit(rows);
        return;
    }
    const RowInterval below = rows.back();
    const int lowest_last = corner ? below.first - 1 : below.first;
    for (int last = below.last; last >= lowest_last; --last) {
        for (int first = std::min(last, below.first); last - first + 1 <= remaining; --first) {
            rows.push_back({first, last});
            grow(rows, remaining - (last - first + 1), corner, emit);
            rows.pop_back();
        }
    }
}

void for_each_diagram(int area, bool corner, const std::function<void(const std::vector<RowInterval>&)>& emit) {
    std::vector<RowInterval> rows;
    for (int w = 1; w <= area; ++w) {
        rows.assign(1, RowInterval{0, w - 1});
        grow(rows, area - w, corner, emit);
    }
}

}  // namespace

SkewDiagram::SkewDiagram(std::vector<RowInterval> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw Error(ErrorCode::InvalidDiagram, "diagram has no rows");
    int min_first = rows_.front().first;
    for (const auto& r : rows_) {
        if (r.last < r.first) throw Error(ErrorCode::InvalidDiagram, "empty row interval");
        min_first = std::min(min_first, r.first);
    }
    for (auto& r : rows_) {
        r.first -= min_first;
        r.last -= min_first;
    }
}

SkewDiagram SkewDiagram::from_cells(const std::vector<Cell>& cells) {
    if (cells.empty()) throw Error(ErrorCode::InvalidDiagram, "no cells");
    std::map<int, std::set<int>> by_row;
    for (const auto& c : cells) by_row[c.y].insert(c.x);
    std::vector<RowInterval> rows;
    int expected_row = by_row.begin()->first;
    for (const auto& [y, xs] : by_row) {
        if (y != expected_row) throw Error(ErrorCode::InvalidDiagram, "diagram has an empty row");
        const int first = *xs.begin(), last = *xs.rbegin();
        if (last - first + 1 != static_cast<int>(xs.size())) {
            throw Error(ErrorCode::InvalidDiagram, "row " + std::to_string(y) + " is not an interval");
        }
        rows.push_back({first, last});
        ++expected_row;
    }
    return SkewDiagram(std::move(rows));
}

std::vector<Cell> SkewDiagram::cells() const {
    std::vector<Cell> out;
    for (std::size_t y = 0; y < rows_.size(); ++y) {
        for (int x = rows_[y].first; x <= rows_[y].last; ++x) out.push_back({x, static_cast<int>(y)});
    }
    return out;
}

int SkewDiagram::area() const {
    int a = 0;
    for (const auto& r : rows_) a += r.length();
    return a;
}

int SkewDiagram::columns() const {
    int lo = rows_.front().first, hi = rows_.front().last;
    for (const auto& r : rows_) {
        lo = std::min(lo, r.first);
        hi = std::max(hi, r.last);
    }
    return hi - lo + 1;
}

SkewDiagram SkewDiagram::rotated() const {
    std::vector<RowInterval> rows;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) rows.push_back({-it->last, -it->first});
    return SkewDiagram(std::move(rows));
}

std::string SkewDiagram::to_string() const {
    std::string s;
    for (const auto& r : rows_) {
        if (!s.empty()) s += ";";
        s += std::to_string(r.first) + ":" + std::to_string(r.last);
    }
    return s;
}

bool is_module_diagram(const std::vector<Cell>& cells) {
    const std::set<Cell> set(cells.begin(), cells.end());
    for (const auto& u : set) {
        if (!set.count({u.x + 1, u.y + 1})) continue;
        if (set.count({u.x + 1, u.y}) != set.count({u.x, u.y + 1})) return false;
    }
    return true;
}

bool is_module_diagram(const SkewDiagram& d) { return is_module_diagram(d.cells()); }

bool is_parallelogram(const SkewDiagram& d) {
    const auto& rows = d.rows();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto &below = rows[i - 1], &above = rows[i];
        if (above.first > below.first || above.last > below.last) return false;
        if (above.last < below.first) return false;
    }
    return true;
}

bool has_cut_point(const SkewDiagram& d) {
    const auto& rows = d.rows();
    bool corner = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto &below = rows[i - 1], &above = rows[i];
        if (above.first > below.first || above.last > below.last) return false;
        if (above.last < below.first - 1) return false;  // gap: disconnected
        if (above.last == below.first - 1) corner = true;
    }
    return corner;
}

std::vector<SkewDiagram> enumerate_parallelogram(int area, int cap) {
    check_area(area, cap);
    std::vector<SkewDiagram> out;
    for_each_diagram(area, false, [&](const std::vector<RowInterval>& rows) { out.emplace_back(rows); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SkewDiagram> enumerate_corner_connected(int area, int cap) {
    check_area(area, cap);
    std::vector<SkewDiagram> out;
    for_each_diagram(area, true, [&](const std::vector<RowInterval>& rows) { out.emplace_back(rows); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<SkewDiagram>> enumerate_fixed_modules(int n, int cap) {
    check_area(n, cap);
    std::vector<std::vector<SkewDiagram>> by_area(static_cast<std::size_t>(n) + 1);
    for (int a = 1; a <= n; ++a) by_area[static_cast<std::size_t>(a)] = enumerate_parallelogram(a, cap);

    std::vector<std::vector<SkewDiagram>> out;
    std::vector<SkewDiagram> parts;
    // Parts chosen in non-increasing (area, index) order so each multiset appears once.
    std::function<void(int, int, std::size_t)> rec = [&](int remaining, int max_area, std::size_t max_index) {
        if (remaining == 0) {
            auto sorted = parts;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(std::move(sorted));
            return;
        }
        for (int a = std::min(remaining, max_area); a >= 1; --a) {
            const auto& list = by_area[static_cast<std::size_t>(a)];
            const std::size_t top = a == max_area ? std::min(max_index, list.size() - 1) : list.size() - 1;
            for (std::size_t i = 0; i <= top; ++i) {
                parts.push_back(list[i]);
                rec(remaining - a, a, i);
                parts.pop_back();
            }
        }
    };
    rec(n, n, static_cast<std::size_t>(-1));
    return out;
}

ModulePresentation module_from_cells(const std::vector<Cell>& cells, const Field& field) {
    if (!is_module_diagram(cells)) throw Error(ErrorCode::InvalidDiagram, "cells do not carry commuting x, y actions");
    std::map<Cell, std::size_t> index;
    for (const auto& c : cells) {
        if (!index.emplace(c, index.size()).second) throw Error(ErrorCode::InvalidDiagram, "repeated cell");
    }
    const std::size_t n = cells.size();
    Matrix x(field, n, n), y(field, n, n);
    for (const auto& [c, j] : index) {
        if (auto it = index.find({c.x + 1, c.y}); it != index.end()) x(it->second, j) = FieldElement(field, 1);
        if (auto it = index.find({c.x, c.y + 1}); it != index.end()) y(it->second, j) = FieldElement(field, 1);
    }
    return validate(std::move(x), std::move(y));
}

ModulePresentation module_from_diagram(const SkewDiagram& d, const Field& field) {
    return module_from_cells(d.cells(), field);
}

ModulePresentation module_from_diagrams(const std::vector<SkewDiagram>& parts, const Field& field) {
    ModulePresentation out = zero_module(field);
    for (const auto& d : parts) out = direct_sum(out, module_from_diagram(d, field));
    return out;
}

std::size_t corner_generators(const SkewDiagram& d) {
    const auto cells = d.cells();
    const std::set<Cell> set(cells.begin(), cells.end());
    std::size_t count = 0;
    for (const auto& c : cells) {
        if (!set.count({c.x - 1, c.y}) && !set.count({c.x, c.y - 1})) ++count;
    }
    return count;
}

std::vector<std::vector<std::uint64_t>> count_by_area_and_columns(int max_area, int cap) {
    if (max_area < 0) throw Error(ErrorCode::InvalidArgument, "max_area must be non-negative");
    if (max_area > cap) {
        throw Error(ErrorCode::CapExceeded, "area " + std::to_string(max_area) + " exceeds the cap " + std::to_string(cap));
    }
    const auto size = static_cast<std::size_t>(max_area) + 1;
    std::vector<std::vector<std::uint64_t>> counts(size, std::vector<std::uint64_t>(size, 0));
    counts[0][0] = 1;  // empty diagram
    for (int a = 1; a <= max_area; ++a) {
        for_each_diagram(a, false, [&](const std::vector<RowInterval>& rows) {
            // endpoints are monotone, so the column span runs from the top row's first to the bottom row's last
            const int cols = rows.front().last - rows.back().first + 1;
            ++counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(cols)];
        });
    }
    return counts;
}

std::string counts_csv(const std::vector<std::vector<std::uint64_t>>& counts) {
    std::string s = "area,columns,count\n";
    for (std::size_t a = 0; a < counts.size(); ++a) {
        for (std::size_t c = 0; c < counts[a].size(); ++c) {
            if (counts[a][c] == 0) continue;
            s += std::to_string(a) + "," + std::to_string(c) + "," + std::to_string(counts[a][c]) + "\n";
        }
    }
    return s;
}

std::string diagrams_csv(const std::vector<SkewDiagram>& diagrams) {
    std::string s;
    for (const auto& d : diagrams) s += d.to_string() + "\n";
    return s;
}

}  // namespace pointmod
