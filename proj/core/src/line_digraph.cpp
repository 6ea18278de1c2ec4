#include "netreal/line_digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace netreal {

std::optional<RecognitionFailure> recognize_line_digraph(const BinaryMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("line digraph recognition requires a square matrix");
    for (int i = 0; i < a.rows(); ++i)
        if (a.at(i, i))
            return RecognitionFailure{RecognitionFailure::Kind::nonzero_diagonal, i, -1};
    if (auto witness = columns_equal_or_orthogonal(a))
        return RecognitionFailure{RecognitionFailure::Kind::column_conflict, witness->first,
                                  witness->second};
    return std::nullopt;
}

namespace {

// Equivalence classes of equal rows (by_rows) or equal columns, scanned in
// increasing index order. If a class of zero rows/columns exists it is moved,
// order of the others preserved, to the last position.
std::vector<IndexSet> scan_classes(const BinaryMatrix& a, bool by_rows, bool& has_degenerate) {
    int n = by_rows ? a.rows() : a.cols();
    std::vector<char> assigned(static_cast<std::size_t>(n), 0);
    std::vector<IndexSet> classes;
    int degenerate_at = -1;
    for (int i = 0; i < n; ++i) {
        if (assigned[static_cast<std::size_t>(i)])
            continue;
        std::vector<int> members;
        for (int j = i; j < n; ++j) {
            if (assigned[static_cast<std::size_t>(j)])
                continue;
            bool equal = by_rows ? a.rows_equal(i, j) : a.cols_equal(i, j);
            if (equal) {
                members.push_back(j);
                assigned[static_cast<std::size_t>(j)] = 1;
            }
        }
        bool zero = by_rows ? a.row_is_zero(i) : a.col_is_zero(i);
        if (zero)
            degenerate_at = static_cast<int>(classes.size());
        classes.emplace_back(std::move(members));
    }
    has_degenerate = degenerate_at >= 0;
    if (has_degenerate && degenerate_at != static_cast<int>(classes.size()) - 1) {
        IndexSet degenerate = classes[static_cast<std::size_t>(degenerate_at)];
        classes.erase(classes.begin() + degenerate_at);
        classes.push_back(std::move(degenerate));
    }
    return classes;
}

} // namespace

ClassStructure build_classes(const BinaryMatrix& a) {
    if (recognize_line_digraph(a))
        throw std::invalid_argument("matrix is not a line digraph adjacency matrix");
    ClassStructure cs;
    cs.v_out = scan_classes(a, true, cs.has_source_class);
    cs.v_in = scan_classes(a, false, cs.has_sink_class);
    int m = static_cast<int>(cs.v_out.size()) - (cs.has_source_class ? 1 : 0);
    int n = static_cast<int>(cs.v_in.size()) - (cs.has_sink_class ? 1 : 0);
    if (m != n)
        throw std::logic_error("row and column class counts disagree on a recognized matrix");
    cs.transient_count = m;
    return cs;
}

std::vector<int> match_vertices(const BinaryMatrix& a, const ClassStructure& cs) {
    std::vector<int> match(static_cast<std::size_t>(cs.transient_count), -1);
    std::vector<char> taken(cs.v_in.size(), 0);
    for (int i = 0; i < cs.transient_count; ++i) {
        int representative = cs.v_out[static_cast<std::size_t>(i)][0];
        IndexSet row = a.row_support(representative);
        int found = -1;
        for (int j = 0; j < cs.transient_count; ++j) {
            if (cs.v_in[static_cast<std::size_t>(j)] == row) {
                found = j;
                break;
            }
        }
        if (found < 0 || taken[static_cast<std::size_t>(found)])
            throw std::logic_error("vertex matching is ambiguous; recognition was violated");
        taken[static_cast<std::size_t>(found)] = 1;
        match[static_cast<std::size_t>(i)] = found;
    }
    return match;
}

CollapsedPair collapse(const BinaryMatrix& a, const ClassStructure& cs) {
    int m = a.cols();
    BinaryMatrix a_plus(static_cast<int>(cs.v_out.size()), m);
    for (int k = 0; k < static_cast<int>(cs.v_out.size()); ++k) {
        int rep = cs.v_out[static_cast<std::size_t>(k)][0];
        for (int c = 0; c < m; ++c)
            a_plus.set(k, c, a.at(rep, c));
    }
    std::vector<int> match = match_vertices(a, cs);
    BinaryMatrix a_minus(static_cast<int>(cs.v_in.size()), m);
    for (int k = 0; k < cs.transient_count; ++k) {
        int rep = cs.v_in[static_cast<std::size_t>(match[static_cast<std::size_t>(k)])][0];
        for (int r = 0; r < m; ++r)
            a_minus.set(k, r, a.at(r, rep));
    }
    // The sink class row, when present, is zero and stays last.
    return CollapsedPair{std::move(a_plus), std::move(a_minus)};
}

namespace {

void check_partition(const std::vector<IndexSet>& groups, const IndexSet& expected,
                     const char* what) {
    IndexSet seen;
    int total = 0;
    for (const auto& g : groups) {
        if (g.empty())
            throw std::invalid_argument(std::string(what) + " groups must be nonempty");
        if (seen.intersects(g))
            throw std::invalid_argument(std::string(what) + " groups overlap");
        seen = IndexSet::set_union(seen, g);
        total += g.size();
    }
    if (!(seen == expected) || total != expected.size())
        throw std::invalid_argument(std::string(what) +
                                    " groups do not partition the degenerate columns");
}

int transient_rows(const BinaryMatrix& a) {
    int t = a.rows();
    while (t > 0 && a.row_is_zero(t - 1))
        --t;
    for (int r = 0; r < t; ++r)
        if (a.row_is_zero(r))
            throw std::invalid_argument("zero row not in last position of a collapsed matrix");
    return t;
}

} // namespace

IncidencePair augment(const CollapsedPair& collapsed, const std::vector<IndexSet>& source_groups,
                      const std::vector<IndexSet>& sink_groups) {
    const BinaryMatrix& c_plus = collapsed.a_plus;
    const BinaryMatrix& c_minus = collapsed.a_minus;
    if (c_plus.cols() != c_minus.cols())
        throw std::invalid_argument("collapsed matrices have different arc counts");
    int m = c_plus.cols();
    check_partition(source_groups, c_minus.zero_cols(), "source");
    check_partition(sink_groups, c_plus.zero_cols(), "sink");

    int n_t_plus = transient_rows(c_plus);
    int n_t_minus = transient_rows(c_minus);
    if (n_t_plus != n_t_minus)
        throw std::invalid_argument("collapsed matrices disagree on transient vertex count");
    int n = n_t_plus;
    int k = static_cast<int>(source_groups.size());
    int n_z = static_cast<int>(sink_groups.size());

    IncidencePair out{BinaryMatrix(n + k + n_z, m), BinaryMatrix(n + k + n_z, m)};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) {
            out.a_plus.set(r, c, c_plus.at(r, c));
            out.a_minus.set(r, c, c_minus.at(r, c));
        }
    for (int g = 0; g < k; ++g)
        for (int c : source_groups[static_cast<std::size_t>(g)])
            out.a_minus.set(n + g, c, 1);
    for (int g = 0; g < n_z; ++g)
        for (int c : sink_groups[static_cast<std::size_t>(g)])
            out.a_plus.set(n + k + g, c, 1);

    for (int c = 0; c < m; ++c)
        if (out.a_plus.col_support(c).size() != 1 || out.a_minus.col_support(c).size() != 1)
            throw std::logic_error("augmented incidence column without a unique 1");
    return out;
}

namespace {

void check_incidence(const IncidencePair& p) {
    if (p.a_plus.rows() != p.a_minus.rows() || p.a_plus.cols() != p.a_minus.cols())
        throw std::invalid_argument("incidence matrices must have equal shape");
    for (int c = 0; c < p.a_plus.cols(); ++c)
        if (p.a_plus.col_support(c).size() != 1 || p.a_minus.col_support(c).size() != 1)
            throw std::invalid_argument("incidence column must contain exactly one 1");
}

std::vector<VertexRole> derive_roles(int vertex_count, const std::vector<Arc>& arcs) {
    std::vector<int> in_deg(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> out_deg(static_cast<std::size_t>(vertex_count), 0);
    for (const Arc& arc : arcs) {
        ++out_deg[static_cast<std::size_t>(arc.tail)];
        ++in_deg[static_cast<std::size_t>(arc.head)];
    }
    std::vector<VertexRole> roles(static_cast<std::size_t>(vertex_count), VertexRole::transient);
    for (int v = 0; v < vertex_count; ++v) {
        bool in = in_deg[static_cast<std::size_t>(v)] > 0;
        bool out = out_deg[static_cast<std::size_t>(v)] > 0;
        if (out && !in)
            roles[static_cast<std::size_t>(v)] = VertexRole::source;
        else if (in && !out)
            roles[static_cast<std::size_t>(v)] = VertexRole::sink;
    }
    return roles;
}

} // namespace

HostGraph host_adjacency(const IncidencePair& p) {
    check_incidence(p);
    HostGraph out;
    out.adjacency = count_product(p.a_plus, p.a_minus.transposed());
    out.graph.vertex_count = p.a_plus.rows();
    out.graph.arcs.reserve(static_cast<std::size_t>(p.a_plus.cols()));
    for (int c = 0; c < p.a_plus.cols(); ++c)
        out.graph.arcs.push_back(Arc{p.a_minus.col_support(c)[0], p.a_plus.col_support(c)[0]});
    out.graph.roles = derive_roles(out.graph.vertex_count, out.graph.arcs);
    return out;
}

BinaryMatrix line_adjacency(const IncidencePair& p) {
    check_incidence(p);
    return pattern_product(p.a_minus.transposed(), p.a_plus);
}

IncidencePair incidence_of(const MultiDigraph& g) {
    int m = static_cast<int>(g.arcs.size());
    IncidencePair p{BinaryMatrix(g.vertex_count, m), BinaryMatrix(g.vertex_count, m)};
    for (int j = 0; j < m; ++j) {
        const Arc& arc = g.arcs[static_cast<std::size_t>(j)];
        p.a_plus.set(arc.head, j, 1);
        p.a_minus.set(arc.tail, j, 1);
    }
    return p;
}

std::vector<MultiDigraph> enumerate_small_digraphs(int max_vertices, int max_arcs) {
    if (max_vertices < 1 || max_vertices > 4 || max_arcs < 1 || max_arcs > 5)
        throw std::invalid_argument("enumeration bounds exceed 4 vertices / 5 arcs");
    std::vector<MultiDigraph> out;
    for (int v = 2; v <= max_vertices; ++v) {
        std::vector<Arc> pairs;
        for (int t = 0; t < v; ++t)
            for (int h = 0; h < v; ++h)
                if (t != h)
                    pairs.push_back(Arc{t, h});
        int p = static_cast<int>(pairs.size());
        for (int count = 1; count <= max_arcs; ++count) {
            // Non-decreasing index sequences = multisets of arcs.
            std::vector<int> pick(static_cast<std::size_t>(count), 0);
            while (true) {
                std::vector<char> used(static_cast<std::size_t>(v), 0);
                for (int i : pick) {
                    used[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].tail)] = 1;
                    used[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].head)] = 1;
                }
                if (std::all_of(used.begin(), used.end(), [](char u) { return u != 0; })) {
                    MultiDigraph g;
                    g.vertex_count = v;
                    for (int i : pick)
                        g.arcs.push_back(pairs[static_cast<std::size_t>(i)]);
                    g.roles = derive_roles(v, g.arcs);
                    out.push_back(std::move(g));
                }
                int pos = count - 1;
                while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == p - 1)
                    --pos;
                if (pos < 0)
                    break;
                int next = pick[static_cast<std::size_t>(pos)] + 1;
                for (int i = pos; i < count; ++i)
                    pick[static_cast<std::size_t>(i)] = next;
            }
        }
    }
    return out;
}

std::optional<std::vector<int>> arc_preserving_isomorphism(const MultiDigraph& a,
                                                           const MultiDigraph& b) {
    if (a.vertex_count != b.vertex_count || a.arcs.size() != b.arcs.size())
        return std::nullopt;
    std::vector<int> phi(static_cast<std::size_t>(a.vertex_count), -1);
    auto bind = [&phi](int from, int to) {
        int& slot = phi[static_cast<std::size_t>(from)];
        if (slot >= 0 && slot != to)
            return false;
        slot = to;
        return true;
    };
    for (std::size_t j = 0; j < a.arcs.size(); ++j) {
        if (!bind(a.arcs[j].tail, b.arcs[j].tail) || !bind(a.arcs[j].head, b.arcs[j].head))
            return std::nullopt;
    }
    std::vector<char> hit(static_cast<std::size_t>(b.vertex_count), 0);
    for (int v = 0; v < a.vertex_count; ++v) {
        int image = phi[static_cast<std::size_t>(v)];
        if (image < 0)
            return std::nullopt; // isolated vertices cannot be matched by arcs
        if (hit[static_cast<std::size_t>(image)])
            return std::nullopt;
        hit[static_cast<std::size_t>(image)] = 1;
        if (a.roles[static_cast<std::size_t>(v)] != b.roles[static_cast<std::size_t>(image)])
            return std::nullopt;
    }
    return phi;
}

} // namespace netreal
