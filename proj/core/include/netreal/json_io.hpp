#pragma once

#include "netreal/boundary_system.hpp"
#include "netreal/metric_graph.hpp"
#include "netreal/realize.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace netreal {

/// Malformed or schema-violating input; the CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parsed problem document: either a flat boundary system or a graph-posed
/// problem. All indices in files are 1-based.
struct ProblemFile {
    std::variant<BoundarySystem, MetricGraphProblem> problem;

    bool is_boundary_system() const {
        return std::holds_alternative<BoundarySystem>(problem);
    }
    const BoundarySystem& boundary_system() const { return std::get<BoundarySystem>(problem); }
    const MetricGraphProblem& metric_graph() const {
        return std::get<MetricGraphProblem>(problem);
    }
};

/// Entries may be integers, decimals, or {"num","den"} exact rationals. Unless
/// overridden, the zero-pattern tolerance is 0 for an all-exact boundary system
/// and 1e-12 otherwise (graph problems always derive float coefficients).
ProblemFile parse_problem_text(const std::string& text, std::optional<double> tol_override);
ProblemFile load_problem_file(const std::string& path, std::optional<double> tol_override);

/// Canonical document: fixed key order, 1-based indices, exact entries emitted
/// as integers or num/den pairs. Re-parsing a canonical document reproduces the
/// value exactly.
std::string canonical_json(const BoundarySystem& system);
std::string canonical_json(const MetricGraphProblem& problem);

std::string network_json(const RealizedNetwork& network);

} // namespace netreal
