#include "netreal/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace netreal {

std::string format_index_set(const IndexSet& s) {
    std::string out = "{";
    for (int i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s[i] + 1);
    }
    out += '}';
    return out;
}

namespace {

std::string format_cells(const std::vector<std::vector<std::string>>& cells,
                         const std::string& indent) {
    if (cells.empty())
        return indent + "[ ]\n";
    std::size_t cols = cells.front().size();
    std::vector<std::size_t> width(cols, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < cols; ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        out << indent << "[";
        for (std::size_t c = 0; c < cols; ++c) {
            out << ' ' << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        out << " ]\n";
    }
    return out.str();
}

} // namespace

std::string format_matrix(const RealMatrix& m, const std::string& indent) {
    std::vector<std::vector<std::string>> cells;
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<std::string> row;
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(m.at(r, c).to_string());
        cells.push_back(std::move(row));
    }
    return format_cells(cells, indent);
}

std::string format_matrix(const BinaryMatrix& m, const std::string& indent) {
    std::vector<std::vector<std::string>> cells;
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<std::string> row;
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(std::to_string(m.at(r, c)));
        cells.push_back(std::move(row));
    }
    return format_cells(cells, indent);
}

std::string format_matrix(const IntMatrix& m, const std::string& indent) {
    std::vector<std::vector<std::string>> cells;
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<std::string> row;
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(std::to_string(m.at(r, c)));
        cells.push_back(std::move(row));
    }
    return format_cells(cells, indent);
}

} // namespace netreal
