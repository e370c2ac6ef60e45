#pragma once

// Torus-fixed witness modules for the classification table rows.

#include <sstream>
#include <string>
#include <vector>

#include "pointmod/polyomino.hpp"

namespace witness {

/// "0:1;0:0" -> rows [0,1], [0,0] (bottom-up).
inline pointmod::SkewDiagram diagram(const std::string& text) {
    std::vector<pointmod::RowInterval> rows;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        const auto colon = part.find(':');
        rows.push_back({std::stoi(part.substr(0, colon)), std::stoi(part.substr(colon + 1))});
    }
    return pointmod::SkewDiagram(std::move(rows));
}

inline pointmod::ModulePresentation build(const std::vector<std::string>& parts, const pointmod::Field& f) {
    std::vector<pointmod::SkewDiagram> ds;
    for (const auto& p : parts) ds.push_back(diagram(p));
    return pointmod::module_from_diagrams(ds, f);
}

/// Diagram parts of a witness for the table row with this label.
inline std::vector<std::string> parts_for(int n, const std::string& label) {
    struct Entry {
        int n;
        const char* label;
        std::vector<std::string> parts;
    };
    static const std::vector<Entry> table = {
        {2, "O_Z", {"0:1"}},
        {2, "k^2", {"0:0", "0:0"}},
        {3, "O_Z", {"0:2"}},
        {3, "(A/m^2)^*", {"1:1;0:1"}},
        {3, "k + O_Z", {"0:0", "0:1"}},
        {3, "k^3", {"0:0", "0:0", "0:0"}},
        {4, "O_Z", {"0:3"}},
        {4, "F1", {"2:2;0:2"}},
        {4, "F2", {"1:2;0:1"}},
        {4, "k + A/m^2", {"0:0", "0:1;0:0"}},
        {4, "k + O_Z (curvilinear, length 3)", {"0:0", "0:2"}},
        {4, "O_Z + O_Z", {"0:1", "0:1"}},
        {4, "O_Z + O_Z'", {"0:0;0:0", "0:1"}},
        {4, "k^2 + O_Z", {"0:0", "0:0", "0:1"}},
        {4, "k + (A/m^2)^*", {"0:0", "1:1;0:1"}},
        {4, "k^4", {"0:0", "0:0", "0:0", "0:0"}},
    };
    for (const auto& e : table) {
        if (e.n == n && label == e.label) return e.parts;
    }
    return {};
}

/// Prefix of classify(...).name() expected for a table label.
inline std::string expected_name(const std::string& label) {
    return label == "O_Z" ? "structure sheaf: " : label;
}

}  // namespace witness
