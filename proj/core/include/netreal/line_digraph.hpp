#pragma once

#include "netreal/binmat.hpp"
#include "netreal/matrix.hpp"

#include <optional>
#include <vector>

namespace netreal {

/// Why a square binary matrix is not the adjacency matrix of a line digraph.
struct RecognitionFailure {
    enum class Kind {
        nonzero_diagonal, ///< index_a is a diagonal position with a 1
        column_conflict,  ///< columns index_a, index_b neither equal nor orthogonal
    };
    Kind kind;
    int index_a = -1;
    int index_b = -1;
};

/// PASS (nullopt) iff the diagonal is zero and any two columns are equal or
/// orthogonal; then the matrix is the adjacency matrix of the line digraph of
/// some loop-free multi digraph. Convention: entry (i,j) = 1 means arc j feeds
/// arc i, i.e. head(j) = tail(i). Throws std::invalid_argument if not square.
std::optional<RecognitionFailure> recognize_line_digraph(const BinaryMatrix& a);

/// Row and column classes of a recognized matrix. Classes are scanned in
/// increasing index order; a degenerate class (zero rows, resp. zero columns)
/// is moved to the last position. Equal rows of the matrix group the arcs
/// leaving one vertex, equal columns the arcs entering one vertex.
struct ClassStructure {
    std::vector<IndexSet> v_out; ///< arc groups by tail vertex; size M'
    std::vector<IndexSet> v_in;  ///< arc groups by head vertex; size N'
    bool has_source_class = false;
    bool has_sink_class = false;
    int transient_count = 0; ///< M = N
};

ClassStructure build_classes(const BinaryMatrix& a);

/// For each non-degenerate out-class, the index of the in-class belonging to
/// the same vertex: out-class i and in-class j are matched iff a(p, r) = 1 for
/// representative members p, r. Throws std::logic_error if the structure is
/// ambiguous (possible only if recognition was violated).
std::vector<int> match_vertices(const BinaryMatrix& a, const ClassStructure& cs);

/// One representative row per out-class (a_plus, M' rows) and one representative
/// column per in-class transposed (a_minus, N' rows); transient rows of a_minus
/// are ordered by the vertex matching so that row k of both matrices describes
/// the same vertex. Degenerate rows stay last.
struct CollapsedPair {
    BinaryMatrix a_plus;
    BinaryMatrix a_minus;
};

CollapsedPair collapse(const BinaryMatrix& a, const ClassStructure& cs);

/// Incoming (a_plus) and outgoing (a_minus) vertex-arc incidence matrices over
/// a shared vertex row order; every column of each matrix has exactly one 1.
struct IncidencePair {
    BinaryMatrix a_plus;
    BinaryMatrix a_minus;
};

/// Extends a collapsed pair to full incidence matrices for a chosen grouping of
/// the source arcs (zero columns of a_minus) and sink arcs (zero columns of
/// a_plus). Appended rows follow the transient block: first one zero row in
/// a_plus (resp. one indicator row in a_minus) per source group, then one
/// indicator row in a_plus (resp. zero row in a_minus) per sink group. Throws
/// std::invalid_argument when the groups do not partition the right column sets.
IncidencePair augment(const CollapsedPair& collapsed, const std::vector<IndexSet>& source_groups,
                      const std::vector<IndexSet>& sink_groups);

enum class VertexRole { transient, source, sink };

struct Arc {
    int tail;
    int head;
};

/// Loop-free multi digraph with indexed arcs.
struct MultiDigraph {
    int vertex_count = 0;
    std::vector<Arc> arcs;
    std::vector<VertexRole> roles;
};

struct HostGraph {
    IntMatrix adjacency; ///< entry (i,j) = number of arcs from vertex j to vertex i
    MultiDigraph graph;
};

/// Host multi digraph of an incidence pair: adjacency a_plus * a_minus^T, arc j
/// running from the row of its 1 in a_minus to the row of its 1 in a_plus.
HostGraph host_adjacency(const IncidencePair& p);

/// Line digraph adjacency a_minus^T * a_plus of the host graph.
BinaryMatrix line_adjacency(const IncidencePair& p);

/// Incidence pair of an explicit multi digraph.
IncidencePair incidence_of(const MultiDigraph& g);

/// Exhaustive, duplicate-free enumeration of loop-free multi digraphs with no
/// isolated vertices, up to the given bounds. Arcs are emitted in a canonical
/// sorted order so each multiset of arcs appears once. Bounds are capped at
/// 4 vertices / 5 arcs; larger requests are rejected.
std::vector<MultiDigraph> enumerate_small_digraphs(int max_vertices, int max_arcs);

/// Vertex bijection phi with phi(tail_a(j)) = tail_b(j) and
/// phi(head_a(j)) = head_b(j) for every arc index j, if one exists. Arc indices
/// are meaningful labels here, so the map is forced by the arc lists.
std::optional<std::vector<int>> arc_preserving_isomorphism(const MultiDigraph& a,
                                                           const MultiDigraph& b);

} // namespace netreal
