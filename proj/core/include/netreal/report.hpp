#pragma once

#include "netreal/matrix.hpp"

#include <string>

namespace netreal {

/// "{a,b,c}" with 1-based indices; "{}" when empty.
std::string format_index_set(const IndexSet& s);

/// Rows as "[ a b c ]" lines with column-aligned canonical entries.
std::string format_matrix(const RealMatrix& m, const std::string& indent = "  ");
std::string format_matrix(const BinaryMatrix& m, const std::string& indent = "  ");
std::string format_matrix(const IntMatrix& m, const std::string& indent = "  ");

} // namespace netreal
