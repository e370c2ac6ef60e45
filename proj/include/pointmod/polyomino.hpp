#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pointmod/field.hpp"
#include "pointmod/modrep.hpp"

namespace pointmod {

/// Lattice cell (column, row); x acts by moving right, y by moving up.
struct Cell {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Closed column interval [first, last] of one row.
struct RowInterval {
    int first = 0;
    int last = 0;
    int length() const { return last - first + 1; }
    friend auto operator<=>(const RowInterval&, const RowInterval&) = default;
};

/// Diagram given by one column interval per row, bottom row first,
/// translated so that the minimum row and column are 0.
class SkewDiagram {
public:
    /// Throws Error{InvalidDiagram} for empty input or an empty interval.
    explicit SkewDiagram(std::vector<RowInterval> rows);
    /// Throws Error{InvalidDiagram} unless the cells fill one interval in each of a run of rows.
    static SkewDiagram from_cells(const std::vector<Cell>& cells);

    const std::vector<RowInterval>& rows() const noexcept { return rows_; }
    /// Row by row, left to right.
    std::vector<Cell> cells() const;
    int area() const;
    int columns() const;
    int height() const { return static_cast<int>(rows_.size()); }

    /// Rotation by a half turn; realises the k-linear dual of the module.
    SkewDiagram rotated() const;
    /// "a:b;c:d;..." bottom-up.
    std::string to_string() const;

    friend auto operator<=>(const SkewDiagram&, const SkewDiagram&) = default;

private:
    std::vector<RowInterval> rows_;
};

/// For every cell u with u+(1,1) present: u+(1,0) present iff u+(0,1) present.
bool is_module_diagram(const std::vector<Cell>& cells);
bool is_module_diagram(const SkewDiagram& d);

/// Consecutive rows share a column and both endpoints weakly decrease going up.
bool is_parallelogram(const SkewDiagram& d);

/// Endpoints weakly decrease going up but two consecutive rows meet only at a corner.
bool has_cut_point(const SkewDiagram& d);

inline constexpr int kDefaultAreaCap = 14;

/// Parallelogram polyominoes of the given area, sorted.
/// Throws Error{InvalidArgument} for area < 1, Error{CapExceeded} above cap.
std::vector<SkewDiagram> enumerate_parallelogram(int area, int cap = kDefaultAreaCap);

/// Diagrams with weakly decreasing endpoints whose consecutive rows overlap or
/// meet at a corner (connected as closed regions), up to translation.
std::vector<SkewDiagram> enumerate_corner_connected(int area, int cap = kDefaultAreaCap);

/// Multisets of parallelogram polyominoes of total area n, each sorted.
std::vector<std::vector<SkewDiagram>> enumerate_fixed_modules(int n, int cap = kDefaultAreaCap);

/// Basis = cells(); X moves a cell right, Y moves it up (0 off the diagram).
/// Throws Error{InvalidDiagram} if the cell set is not a module diagram.
ModulePresentation module_from_diagram(const SkewDiagram& d, const Field& field = Field::rational());
ModulePresentation module_from_cells(const std::vector<Cell>& cells, const Field& field = Field::rational());
/// Several diagrams placed far apart: the direct sum of their modules.
ModulePresentation module_from_diagrams(const std::vector<SkewDiagram>& parts, const Field& field = Field::rational());

/// Cells with no left and no lower neighbour.
std::size_t corner_generators(const SkewDiagram& d);

/// counts[a][c] = number of parallelogram polyominoes with area a and c columns
/// (indices 0..max_area); counts[0][0] = 1 for the empty diagram. Throws Error{CapExceeded} above cap.
std::vector<std::vector<std::uint64_t>> count_by_area_and_columns(int max_area, int cap = kDefaultAreaCap);

/// "area,columns,count" lines (with header), zero counts omitted.
std::string counts_csv(const std::vector<std::vector<std::uint64_t>>& counts);
/// One diagram per line as bottom-up row intervals "a:b" separated by ';'.
std::string diagrams_csv(const std::vector<SkewDiagram>& diagrams);

}  // namespace pointmod
