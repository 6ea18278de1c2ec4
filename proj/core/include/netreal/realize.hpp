#pragma once

#include "netreal/boundary_system.hpp"
#include "netreal/line_digraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netreal {

/// One verifiable reason a boundary system fails some stage of realization.
struct Diagnosis {
    enum class Tag {
        assout,        ///< zero row or column in xi_out
        line_digraph,  ///< coupling pattern is not a line digraph adjacency
        ass3,          ///< an inflow-free row spans several tail classes
        form,          ///< arc-count pair outside {(2,0),(1,1),(0,2),(0,0)} or a loop
        edgeid,        ///< paired components incompatible with one 2x2 edge system
        sink_partition,///< no admissible sink grouping exists
        budget,        ///< partition search stopped by the configured budget
    };
    Tag tag;
    std::string detail; ///< deterministic text, 1-based indices
};

const char* to_string(Diagnosis::Tag tag);

/// Result of the structural assumption checks on a boundary system.
struct AssumptionCheck {
    std::vector<Diagnosis> failures;
    BinaryMatrix line_adjacency;           ///< pattern((hat xi_out)^T (hat xi_in))
    std::optional<ClassStructure> classes; ///< present iff recognition passed
    IndexSet zero_in_rows;                 ///< rows of xi_in with empty support
    bool ok() const { return failures.empty(); }
};

/// Evaluates: no zero row/column of xi_out; the coupling pattern is a line
/// digraph adjacency; every inflow-free row has its outgoing support inside a
/// single tail class. All failures are reported, each with a witness.
AssumptionCheck check_assumptions(const BoundarySystem& system);

/// Row sets of the prospective vertices. parts[i] collects the rows coupled to
/// the outgoing arcs of transient vertex i; source_rows collects the rows whose
/// outgoing support lies in the degenerate tail class.
struct VertexPartition {
    std::vector<IndexSet> parts;
    IndexSet source_rows;
    ClassStructure classes;
    std::vector<int> out_to_in_class; ///< vertex matching of the class structure
    IndexSet zero_in_rows;
};

/// Requires check.ok(). Re-verifies the closure properties (each column support
/// of xi_out and of xi_in lies inside one part) and throws std::logic_error if
/// they fail, since that would contradict the assumption checks.
VertexPartition vertex_partition(const BoundarySystem& system, const AssumptionCheck& check);

/// Splitting of the source rows and source arcs into non-communicating groups:
/// the symmetric coupling pattern of the source block decomposes into
/// irreducible diagonal blocks, one per source vertex.
struct SourceDecomposition {
    std::vector<IndexSet> arc_blocks; ///< outgoing arc columns per source
    std::vector<IndexSet> row_blocks; ///< rows per source
    RealMatrix xi_s_out;              ///< source rows x degenerate tail columns of xi_out
    BinaryMatrix xi_s;                ///< its symmetric coupling pattern
};

SourceDecomposition source_decomposition(const BoundarySystem& system,
                                         const VertexPartition& partition);

/// For each part (transient vertices first, then sources), the sink arcs that
/// emanate from it: zero columns of xi_in whose xi_out column support lies in
/// the part's rows.
std::vector<IndexSet> sink_arcs_by_part(const BoundarySystem& system,
                                        const VertexPartition& partition,
                                        const SourceDecomposition& sources);

/// One way of grouping sink arcs into sink vertices. groups[p] lists the groups
/// of part p in the order of sink_arcs_by_part.
struct SinkPartition {
    std::vector<std::vector<IndexSet>> groups;
};

/// Streams candidate sink partitions in lexicographic order without
/// materializing the search space. The default policy pairs arcs within each
/// part (a part with an odd arc count then admits no candidate); the general
/// policy walks every set partition and exists for diagnosis only, since
/// larger groups cannot carry a 2x2 edge system.
class SinkPartitionEnumerator {
public:
    SinkPartitionEnumerator(std::vector<IndexSet> part_sink_arcs, bool pairs_only);

    bool next(SinkPartition& out); ///< false once exhausted
    bool exhausted() const { return exhausted_; }
    /// Parts with an odd sink arc count (pairs policy only).
    IndexSet odd_parts() const;

private:
    std::vector<IndexSet> part_arcs_;
    bool pairs_only_;
    bool exhausted_;
    // Mixed-radix counter state, one digit vector per part.
    std::vector<std::vector<int>> state_;
    bool advance();
    std::vector<IndexSet> decode_part(int part) const;
};

/// Vertex row layout shared by the incidence matrices: transient vertices,
/// then sources, then sinks in (part, group) order.
struct IncidenceLayout {
    int transient_count = 0;
    int source_count = 0;
    int sink_count = 0;
    std::vector<std::pair<int, int>> sink_provenance; ///< (part, group ordinal) per sink row
};

struct BuiltIncidence {
    IncidencePair pair;
    IncidenceLayout layout;
};

BuiltIncidence build_incidence(const BoundarySystem& system, const VertexPartition& partition,
                               const SourceDecomposition& sources, const SinkPartition& sinks);

/// Adjacency of the reconstructed multi digraph: a_plus * a_minus^T.
IntMatrix multi_digraph_adjacency(const IncidencePair& incidence);

/// Component indices attached to the arcs between one ordered vertex pair:
/// comps_ij are the arcs running j -> i, comps_ji the arcs running i -> j.
struct EdgePairing {
    int vi;
    int vj;
    IndexSet comps_ij;
    IndexSet comps_ji;
};

std::vector<EdgePairing> edge_indices(const IntMatrix& adjacency, const IncidencePair& incidence);

/// First violated edge condition, if any: zero diagonal; every arc-count pair
/// in {(2,0),(1,1),(0,2),(0,0)}; concurrent pairs on one side of the flow split
/// with distinct speeds; countercurrent pairs on opposite sides.
std::optional<Diagnosis> check_conditions(const BoundarySystem& system,
                                          const IntMatrix& adjacency,
                                          const std::vector<EdgePairing>& pairings);

struct RealizedEdge {
    int x0_vertex; ///< endpoint carrying parameter 0
    int x1_vertex;
    int comp_first;  ///< faster component for concurrent pairs, the 0->1 one otherwise
    int comp_second;
    enum class Kind { concurrent_plus, concurrent_minus, countercurrent } kind;
};

/// Localized boundary rows of one reconstructed vertex.
struct VertexSystem {
    int vertex;
    IndexSet rows;
    IndexSet out_cols;
    IndexSet in_cols;
    RealMatrix xi_out_block;
    RealMatrix xi_in_block;
};

struct RealizedNetwork {
    int m = 0;
    std::vector<VertexRole> roles;
    std::vector<std::string> labels; ///< v1..vn, S1..Sk, Z1..Zz
    std::vector<RealizedEdge> edges;
    std::vector<VertexSystem> systems; ///< one per non-sink vertex
    IndexSet j_plus;
    IndexSet j_minus;
    std::vector<Scalar> speeds;
};

/// Requires a passing check_conditions on the same artifacts.
RealizedNetwork assemble_network(const BoundarySystem& system, const VertexPartition& partition,
                                 const SourceDecomposition& sources, const SinkPartition& sinks,
                                 const IntMatrix& adjacency,
                                 const std::vector<EdgePairing>& pairings,
                                 const IncidenceLayout& layout);

struct RealizeOptions {
    long long budget = 10000; ///< maximum sink partitions evaluated
    bool all_partitions = false;
};

struct DiagnosisCount {
    Diagnosis diagnosis;
    long long count = 0;
};

struct RealizeOutcome {
    enum class Status { realizable, not_realizable, budget_exhausted };
    Status status;
    std::optional<RealizedNetwork> network;
    std::vector<DiagnosisCount> diagnoses; ///< aggregated over attempted partitions
    long long partitions_tried = 0;
    long long successes = 0;
    bool census_truncated = false; ///< budget ended the scan after a success was found
};

/// Full pipeline: assumption checks, vertex partition, source decomposition,
/// then a budgeted scan of sink partitions. The first successful partition
/// provides the returned network; the scan continues within the budget to count
/// further successes.
RealizeOutcome realize(const BoundarySystem& system, const RealizeOptions& options = {});

} // namespace netreal
