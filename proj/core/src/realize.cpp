#include "netreal/realize.hpp"

#include "netreal/binmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace netreal {

const char* to_string(Diagnosis::Tag tag) {
    switch (tag) {
    case Diagnosis::Tag::assout: return "assout";
    case Diagnosis::Tag::line_digraph: return "line-digraph";
    case Diagnosis::Tag::ass3: return "ass3";
    case Diagnosis::Tag::form: return "form";
    case Diagnosis::Tag::edgeid: return "edge-identification";
    case Diagnosis::Tag::sink_partition: return "sink-partition-exhausted";
    case Diagnosis::Tag::budget: return "budget-exhausted";
    }
    return "unknown";
}

namespace {

std::string one_based(int i) { return std::to_string(i + 1); }

std::string set_text(const IndexSet& s) {
    std::string out = "{";
    for (int i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += one_based(s[i]);
    }
    out += '}';
    return out;
}

} // namespace

AssumptionCheck check_assumptions(const BoundarySystem& system) {
    validate(system);
    AssumptionCheck result;
    BinaryMatrix hat_out = hat(system.xi_out, system.tol);
    BinaryMatrix hat_in = hat(system.xi_in, system.tol);

    for (int c : hat_out.zero_cols())
        result.failures.push_back(
            {Diagnosis::Tag::assout, "column " + one_based(c) + " of xi_out is zero"});
    for (int r : hat_out.zero_rows())
        result.failures.push_back(
            {Diagnosis::Tag::assout, "row " + one_based(r) + " of xi_out is zero"});

    result.line_adjacency = pattern_product(hat_out.transposed(), hat_in);
    result.zero_in_rows = hat_in.zero_rows();

    if (auto failure = recognize_line_digraph(result.line_adjacency)) {
        if (failure->kind == RecognitionFailure::Kind::nonzero_diagonal)
            result.failures.push_back({Diagnosis::Tag::line_digraph,
                                       "coupling pattern has a nonzero diagonal entry at " +
                                           one_based(failure->index_a)});
        else
            result.failures.push_back({Diagnosis::Tag::line_digraph,
                                       "columns " + one_based(failure->index_a) + " and " +
                                           one_based(failure->index_b) +
                                           " of the coupling pattern are neither equal nor "
                                           "orthogonal"});
        return result;
    }

    result.classes = build_classes(result.line_adjacency);
    for (int i : result.zero_in_rows) {
        IndexSet row = hat_out.row_support(i);
        if (row.empty())
            continue; // already reported as an assout failure
        bool inside_one_class = false;
        for (const IndexSet& cls : result.classes->v_out)
            if (row.is_subset_of(cls)) {
                inside_one_class = true;
                break;
            }
        if (!inside_one_class)
            result.failures.push_back({Diagnosis::Tag::ass3,
                                       "outgoing row " + one_based(i) +
                                           " with support " + set_text(row) +
                                           " spans more than one tail class"});
    }
    return result;
}

VertexPartition vertex_partition(const BoundarySystem& system, const AssumptionCheck& check) {
    if (!check.ok() || !check.classes)
        throw std::invalid_argument("vertex partition requires passing assumption checks");
    const ClassStructure& cs = *check.classes;
    BinaryMatrix hat_out = hat(system.xi_out, system.tol);
    BinaryMatrix hat_in = hat(system.xi_in, system.tol);

    VertexPartition vp;
    vp.classes = cs;
    vp.out_to_in_class = match_vertices(check.line_adjacency, cs);
    vp.zero_in_rows = check.zero_in_rows;

    if (cs.has_source_class) {
        const IndexSet& source_class = cs.v_out.back();
        std::vector<int> rows;
        for (int r = 0; r < hat_out.rows(); ++r)
            if (hat_out.row_support(r).is_subset_of(source_class))
                rows.push_back(r);
        vp.source_rows = IndexSet(std::move(rows));
        if (vp.source_rows.empty())
            throw std::logic_error("degenerate tail class without source rows");
    }

    for (int i = 0; i < cs.transient_count; ++i) {
        IndexSet part;
        for (int s : cs.v_out[static_cast<std::size_t>(i)])
            part = IndexSet::set_union(part, hat_out.col_support(s));
        vp.parts.push_back(std::move(part));
    }

    // Re-verify the partition and closure properties; a failure here means the
    // assumption checks let an inconsistent system through.
    IndexSet all = vp.source_rows;
    int total = vp.source_rows.size();
    for (const IndexSet& part : vp.parts) {
        if (all.intersects(part))
            throw std::logic_error("vertex row sets overlap");
        all = IndexSet::set_union(all, part);
        total += part.size();
    }
    if (total != 2 * system.m || all != IndexSet::range(2 * system.m))
        throw std::logic_error("vertex row sets do not cover every row");
    auto closed = [&](const IndexSet& column_support) {
        if (column_support.empty())
            return true;
        if (column_support.is_subset_of(vp.source_rows))
            return true;
        for (const IndexSet& part : vp.parts)
            if (column_support.intersects(part))
                return column_support.is_subset_of(part);
        return false;
    };
    for (int c = 0; c < hat_out.cols(); ++c)
        if (!closed(hat_out.col_support(c)))
            throw std::logic_error("xi_out column support crosses vertex boundaries");
    for (int c = 0; c < hat_in.cols(); ++c) {
        IndexSet supp = hat_in.col_support(c);
        if (supp.intersects(vp.source_rows) || !closed(supp))
            throw std::logic_error("xi_in column support crosses vertex boundaries");
    }
    return vp;
}

SourceDecomposition source_decomposition(const BoundarySystem& system,
                                         const VertexPartition& partition) {
    SourceDecomposition sd;
    if (partition.source_rows.empty())
        return sd;
    const IndexSet& cols = partition.classes.v_out.back();
    sd.xi_s_out = system.xi_out.submatrix(partition.source_rows, cols);
    BinaryMatrix pattern = hat(sd.xi_s_out, system.tol);
    sd.xi_s = pattern_product(pattern.transposed(), pattern);

    std::vector<IndexSet> position_blocks = irreducible_components(sd.xi_s);
    std::vector<int> block_of_position(static_cast<std::size_t>(cols.size()), -1);
    for (int b = 0; b < static_cast<int>(position_blocks.size()); ++b) {
        std::vector<int> arc_ix;
        for (int pos : position_blocks[static_cast<std::size_t>(b)]) {
            arc_ix.push_back(cols[pos]);
            block_of_position[static_cast<std::size_t>(pos)] = b;
        }
        sd.arc_blocks.emplace_back(std::move(arc_ix));
    }

    std::vector<std::vector<int>> rows_per_block(position_blocks.size());
    for (int rp = 0; rp < pattern.rows(); ++rp) {
        IndexSet supp = pattern.row_support(rp);
        if (supp.empty())
            throw std::logic_error("source row without outgoing coefficients");
        int block = block_of_position[static_cast<std::size_t>(supp[0])];
        for (int pos : supp)
            if (block_of_position[static_cast<std::size_t>(pos)] != block)
                throw std::logic_error("source row couples several irreducible blocks");
        rows_per_block[static_cast<std::size_t>(block)].push_back(partition.source_rows[rp]);
    }
    for (auto& rows : rows_per_block)
        sd.row_blocks.emplace_back(std::move(rows));
    return sd;
}

std::vector<IndexSet> sink_arcs_by_part(const BoundarySystem& system,
                                        const VertexPartition& partition,
                                        const SourceDecomposition& sources) {
    BinaryMatrix hat_out = hat(system.xi_out, system.tol);
    BinaryMatrix hat_in = hat(system.xi_in, system.tol);

    std::vector<IndexSet> part_rows = partition.parts;
    part_rows.insert(part_rows.end(), sources.row_blocks.begin(), sources.row_blocks.end());

    std::vector<std::vector<int>> arcs(part_rows.size());
    for (int c : hat_in.zero_cols()) {
        IndexSet supp = hat_out.col_support(c);
        int owner = -1;
        for (int p = 0; p < static_cast<int>(part_rows.size()); ++p)
            if (supp.intersects(part_rows[static_cast<std::size_t>(p)])) {
                owner = p;
                break;
            }
        if (owner < 0 || !supp.is_subset_of(part_rows[static_cast<std::size_t>(owner)]))
            throw std::logic_error("sink arc is not anchored in a single vertex");
        arcs[static_cast<std::size_t>(owner)].push_back(c);
    }
    std::vector<IndexSet> out;
    out.reserve(arcs.size());
    for (auto& a : arcs)
        out.emplace_back(std::move(a));
    return out;
}

SinkPartitionEnumerator::SinkPartitionEnumerator(std::vector<IndexSet> part_sink_arcs,
                                                 bool pairs_only)
    : part_arcs_(std::move(part_sink_arcs)), pairs_only_(pairs_only), exhausted_(false) {
    for (const IndexSet& arcs : part_arcs_) {
        if (pairs_only_) {
            if (arcs.size() % 2 != 0) {
                exhausted_ = true;
                state_.clear();
                return;
            }
            state_.emplace_back(static_cast<std::size_t>(arcs.size() / 2), 0);
        } else {
            state_.emplace_back(static_cast<std::size_t>(arcs.size()), 0);
        }
    }
}

IndexSet SinkPartitionEnumerator::odd_parts() const {
    std::vector<int> odd;
    for (int p = 0; p < static_cast<int>(part_arcs_.size()); ++p)
        if (part_arcs_[static_cast<std::size_t>(p)].size() % 2 != 0)
            odd.push_back(p);
    return IndexSet(std::move(odd));
}

std::vector<IndexSet> SinkPartitionEnumerator::decode_part(int part) const {
    const IndexSet& arcs = part_arcs_[static_cast<std::size_t>(part)];
    const std::vector<int>& digits = state_[static_cast<std::size_t>(part)];
    std::vector<IndexSet> groups;
    if (pairs_only_) {
        std::vector<int> remaining(arcs.begin(), arcs.end());
        for (int d = 0; d < static_cast<int>(digits.size()); ++d) {
            int first = remaining.front();
            int partner_pos = 1 + digits[static_cast<std::size_t>(d)];
            int partner = remaining[static_cast<std::size_t>(partner_pos)];
            groups.push_back(IndexSet{first, partner});
            remaining.erase(remaining.begin() + partner_pos);
            remaining.erase(remaining.begin());
        }
    } else {
        // Digits form a restricted growth string; groups are ordered by first
        // appearance of their label.
        int label_count = 0;
        for (int d = 0; d < static_cast<int>(digits.size()); ++d)
            label_count = std::max(label_count, digits[static_cast<std::size_t>(d)] + 1);
        std::vector<std::vector<int>> buckets(static_cast<std::size_t>(label_count));
        for (int d = 0; d < static_cast<int>(digits.size()); ++d)
            buckets[static_cast<std::size_t>(digits[static_cast<std::size_t>(d)])].push_back(
                arcs[d]);
        for (auto& bucket : buckets)
            groups.emplace_back(std::move(bucket));
    }
    return groups;
}

bool SinkPartitionEnumerator::advance() {
    for (int part = static_cast<int>(state_.size()) - 1; part >= 0; --part) {
        std::vector<int>& digits = state_[static_cast<std::size_t>(part)];
        int size = part_arcs_[static_cast<std::size_t>(part)].size();
        for (int d = static_cast<int>(digits.size()) - 1; d >= 0; --d) {
            int limit;
            if (pairs_only_) {
                limit = size - 2 * d - 2; // partners available at depth d, minus one
            } else {
                int prefix_max = -1;
                for (int e = 0; e < d; ++e)
                    prefix_max = std::max(prefix_max, digits[static_cast<std::size_t>(e)]);
                limit = std::min(prefix_max + 1, size - 1);
                if (d == 0)
                    limit = 0;
            }
            if (digits[static_cast<std::size_t>(d)] < limit) {
                ++digits[static_cast<std::size_t>(d)];
                for (int e = d + 1; e < static_cast<int>(digits.size()); ++e)
                    digits[static_cast<std::size_t>(e)] = 0;
                return true;
            }
        }
        std::fill(digits.begin(), digits.end(), 0);
    }
    return false;
}

bool SinkPartitionEnumerator::next(SinkPartition& out) {
    if (exhausted_)
        return false;
    out.groups.clear();
    for (int part = 0; part < static_cast<int>(part_arcs_.size()); ++part)
        out.groups.push_back(decode_part(part));
    exhausted_ = !advance();
    return true;
}

BuiltIncidence build_incidence(const BoundarySystem& system, const VertexPartition& partition,
                               const SourceDecomposition& sources, const SinkPartition& sinks) {
    const ClassStructure& cs = partition.classes;
    int n = cs.transient_count;
    int k = static_cast<int>(sources.arc_blocks.size());
    if (static_cast<int>(sinks.groups.size()) != n + k)
        throw std::invalid_argument("sink partition does not cover every part");
    int n_z = 0;
    for (const auto& groups : sinks.groups)
        n_z += static_cast<int>(groups.size());
    int cols = 2 * system.m;

    BuiltIncidence out{IncidencePair{BinaryMatrix(n + k + n_z, cols),
                                     BinaryMatrix(n + k + n_z, cols)},
                       IncidenceLayout{n, k, n_z, {}}};
    for (int i = 0; i < n; ++i) {
        int in_class = partition.out_to_in_class[static_cast<std::size_t>(i)];
        for (int c : cs.v_in[static_cast<std::size_t>(in_class)])
            out.pair.a_plus.set(i, c, 1);
        for (int c : cs.v_out[static_cast<std::size_t>(i)])
            out.pair.a_minus.set(i, c, 1);
    }
    for (int g = 0; g < k; ++g)
        for (int c : sources.arc_blocks[static_cast<std::size_t>(g)])
            out.pair.a_minus.set(n + g, c, 1);
    int sink_row = n + k;
    for (int part = 0; part < n + k; ++part)
        for (int g = 0; g < static_cast<int>(sinks.groups[static_cast<std::size_t>(part)].size());
             ++g) {
            for (int c : sinks.groups[static_cast<std::size_t>(part)][static_cast<std::size_t>(g)])
                out.pair.a_plus.set(sink_row, c, 1);
            out.layout.sink_provenance.emplace_back(part, g);
            ++sink_row;
        }

    for (int c = 0; c < cols; ++c)
        if (out.pair.a_plus.col_support(c).size() != 1 ||
            out.pair.a_minus.col_support(c).size() != 1)
            throw std::logic_error("incidence layout produced a column without a unique 1");
    return out;
}

IntMatrix multi_digraph_adjacency(const IncidencePair& incidence) {
    return count_product(incidence.a_plus, incidence.a_minus.transposed());
}

std::vector<EdgePairing> edge_indices(const IntMatrix& adjacency,
                                      const IncidencePair& incidence) {
    std::vector<EdgePairing> out;
    for (int i = 0; i < adjacency.rows(); ++i)
        for (int j = i + 1; j < adjacency.cols(); ++j) {
            int to_i = adjacency.at(i, j);
            int to_j = adjacency.at(j, i);
            if (to_i + to_j == 0)
                continue;
            EdgePairing pairing;
            pairing.vi = i;
            pairing.vj = j;
            pairing.comps_ij = IndexSet::intersection(incidence.a_plus.row_support(i),
                                                      incidence.a_minus.row_support(j));
            pairing.comps_ji = IndexSet::intersection(incidence.a_plus.row_support(j),
                                                      incidence.a_minus.row_support(i));
            if (pairing.comps_ij.size() != to_i || pairing.comps_ji.size() != to_j)
                throw std::logic_error("edge index sets disagree with the adjacency counts");
            out.push_back(std::move(pairing));
        }
    return out;
}

namespace {

std::optional<Diagnosis> concurrent_pair_failure(const BoundarySystem& system, int vi, int vj,
                                                 const IndexSet& comps) {
    int k = comps[0];
    int l = comps[1];
    bool k_plus = system.j_plus.contains(k);
    bool l_plus = system.j_plus.contains(l);
    std::string where = "vertices (" + one_based(vi) + "," + one_based(vj) + ")";
    if (k_plus != l_plus)
        return Diagnosis{Diagnosis::Tag::edgeid,
                         where + ": concurrent components (" + one_based(k) + "," + one_based(l) +
                             ") lie on opposite sides of the flow split"};
    if (speeds_equal(system, k, l))
        return Diagnosis{Diagnosis::Tag::edgeid,
                         where + ": concurrent components (" + one_based(k) + "," + one_based(l) +
                             ") have equal speeds"};
    return std::nullopt;
}

} // namespace

std::optional<Diagnosis> check_conditions(const BoundarySystem& system,
                                          const IntMatrix& adjacency,
                                          const std::vector<EdgePairing>& pairings) {
    for (int i = 0; i < adjacency.rows(); ++i)
        if (adjacency.at(i, i) != 0)
            return Diagnosis{Diagnosis::Tag::form,
                             "vertex " + one_based(i) + " carries " +
                                 std::to_string(adjacency.at(i, i)) + " loop arc(s)"};
    for (const EdgePairing& pairing : pairings) {
        int to_i = pairing.comps_ij.size();
        int to_j = pairing.comps_ji.size();
        std::string where =
            "vertices (" + one_based(pairing.vi) + "," + one_based(pairing.vj) + ")";
        bool admissible = (to_i == 2 && to_j == 0) || (to_i == 1 && to_j == 1) ||
                          (to_i == 0 && to_j == 2);
        if (!admissible)
            return Diagnosis{Diagnosis::Tag::form,
                             where + ": arc counts (" + std::to_string(to_i) + "," +
                                 std::to_string(to_j) + ") do not form one edge"};
        if (to_i == 1) {
            int k = pairing.comps_ij[0];
            int l = pairing.comps_ji[0];
            bool k_plus = system.j_plus.contains(k);
            bool l_plus = system.j_plus.contains(l);
            if (k_plus == l_plus)
                return Diagnosis{Diagnosis::Tag::edgeid,
                                 where + ": countercurrent components (" + one_based(k) + "," +
                                     one_based(l) + ") both belong to " +
                                     (k_plus ? "J+" : "J-")};
        } else {
            const IndexSet& comps = to_i == 2 ? pairing.comps_ij : pairing.comps_ji;
            if (auto failure = concurrent_pair_failure(system, pairing.vi, pairing.vj, comps))
                return failure;
        }
    }
    return std::nullopt;
}

namespace {

RealizedEdge make_edge(const BoundarySystem& system, int tail_vertex, int head_vertex,
                       const IndexSet& comps, bool countercurrent, int comp_in, int comp_out) {
    RealizedEdge edge{};
    if (countercurrent) {
        // comp_in runs tail -> head; comp_out runs head -> tail.
        if (system.j_plus.contains(comp_in)) {
            edge.x0_vertex = tail_vertex;
            edge.x1_vertex = head_vertex;
            edge.comp_first = comp_in;
            edge.comp_second = comp_out;
        } else {
            edge.x0_vertex = head_vertex;
            edge.x1_vertex = tail_vertex;
            edge.comp_first = comp_out;
            edge.comp_second = comp_in;
        }
        edge.kind = RealizedEdge::Kind::countercurrent;
        return edge;
    }
    int k = comps[0];
    int l = comps[1];
    bool plus = system.j_plus.contains(k);
    if (plus) {
        edge.x0_vertex = tail_vertex;
        edge.x1_vertex = head_vertex;
        edge.kind = RealizedEdge::Kind::concurrent_plus;
    } else {
        edge.x0_vertex = head_vertex;
        edge.x1_vertex = tail_vertex;
        edge.kind = RealizedEdge::Kind::concurrent_minus;
    }
    bool k_faster = system.speeds[static_cast<std::size_t>(k)].value() >
                    system.speeds[static_cast<std::size_t>(l)].value();
    edge.comp_first = k_faster ? k : l;
    edge.comp_second = k_faster ? l : k;
    return edge;
}

} // namespace

RealizedNetwork assemble_network(const BoundarySystem& system, const VertexPartition& partition,
                                 const SourceDecomposition& sources, const SinkPartition& sinks,
                                 const IntMatrix& adjacency,
                                 const std::vector<EdgePairing>& pairings,
                                 const IncidenceLayout& layout) {
    if (check_conditions(system, adjacency, pairings))
        throw std::invalid_argument("assemble_network requires passing edge conditions");
    (void)sinks;

    RealizedNetwork net;
    net.m = system.m;
    net.j_plus = system.j_plus;
    net.j_minus = system.j_minus;
    net.speeds = system.speeds;

    int n = layout.transient_count;
    int k = layout.source_count;
    for (int i = 0; i < n; ++i) {
        net.roles.push_back(VertexRole::transient);
        net.labels.push_back("v" + std::to_string(i + 1));
    }
    for (int g = 0; g < k; ++g) {
        net.roles.push_back(VertexRole::source);
        net.labels.push_back("S" + std::to_string(g + 1));
    }
    for (int z = 0; z < layout.sink_count; ++z) {
        net.roles.push_back(VertexRole::sink);
        net.labels.push_back("Z" + std::to_string(z + 1));
    }

    for (const EdgePairing& pairing : pairings) {
        if (pairing.comps_ij.size() == 1)
            net.edges.push_back(make_edge(system, pairing.vj, pairing.vi, IndexSet{}, true,
                                          pairing.comps_ij[0], pairing.comps_ji[0]));
        else if (pairing.comps_ij.size() == 2)
            net.edges.push_back(
                make_edge(system, pairing.vj, pairing.vi, pairing.comps_ij, false, -1, -1));
        else
            net.edges.push_back(
                make_edge(system, pairing.vi, pairing.vj, pairing.comps_ji, false, -1, -1));
    }

    for (int i = 0; i < n; ++i) {
        VertexSystem vs;
        vs.vertex = i;
        vs.rows = partition.parts[static_cast<std::size_t>(i)];
        vs.out_cols = partition.classes.v_out[static_cast<std::size_t>(i)];
        vs.in_cols = partition.classes
                         .v_in[static_cast<std::size_t>(
                             partition.out_to_in_class[static_cast<std::size_t>(i)])];
        vs.xi_out_block = system.xi_out.submatrix(vs.rows, vs.out_cols);
        vs.xi_in_block = system.xi_in.submatrix(vs.rows, vs.in_cols);
        net.systems.push_back(std::move(vs));
    }
    for (int g = 0; g < k; ++g) {
        VertexSystem vs;
        vs.vertex = n + g;
        vs.rows = sources.row_blocks[static_cast<std::size_t>(g)];
        vs.out_cols = sources.arc_blocks[static_cast<std::size_t>(g)];
        vs.xi_out_block = system.xi_out.submatrix(vs.rows, vs.out_cols);
        vs.xi_in_block = RealMatrix(vs.rows.size(), 0);
        net.systems.push_back(std::move(vs));
    }
    return net;
}

namespace {

void record(std::vector<DiagnosisCount>& list, const Diagnosis& diagnosis) {
    for (DiagnosisCount& entry : list)
        if (entry.diagnosis.tag == diagnosis.tag && entry.diagnosis.detail == diagnosis.detail) {
            ++entry.count;
            return;
        }
    list.push_back({diagnosis, 1});
}

} // namespace

RealizeOutcome realize(const BoundarySystem& system, const RealizeOptions& options) {
    RealizeOutcome outcome;
    outcome.status = RealizeOutcome::Status::not_realizable;

    AssumptionCheck assumptions = check_assumptions(system);
    if (!assumptions.ok()) {
        for (const Diagnosis& failure : assumptions.failures)
            record(outcome.diagnoses, failure);
        return outcome;
    }

    VertexPartition partition = vertex_partition(system, assumptions);
    SourceDecomposition sources = source_decomposition(system, partition);
    std::vector<IndexSet> part_arcs = sink_arcs_by_part(system, partition, sources);
    SinkPartitionEnumerator enumerator(part_arcs, !options.all_partitions);

    if (!options.all_partitions) {
        IndexSet odd = enumerator.odd_parts();
        if (!odd.empty()) {
            record(outcome.diagnoses,
                   {Diagnosis::Tag::sink_partition,
                    "parts " + set_text(odd) +
                        " carry an odd number of sink arcs; no pairing exists"});
            return outcome;
        }
    }

    SinkPartition candidate;
    while (true) {
        if (outcome.partitions_tried >= options.budget) {
            if (!enumerator.exhausted()) {
                if (outcome.successes == 0) {
                    outcome.status = RealizeOutcome::Status::budget_exhausted;
                    record(outcome.diagnoses,
                           {Diagnosis::Tag::budget,
                            "partition search stopped after " +
                                std::to_string(outcome.partitions_tried) +
                                " candidate(s); budget " + std::to_string(options.budget)});
                } else {
                    outcome.census_truncated = true;
                }
            }
            break;
        }
        if (!enumerator.next(candidate))
            break;
        ++outcome.partitions_tried;

        BuiltIncidence incidence = build_incidence(system, partition, sources, candidate);
        IntMatrix adjacency = multi_digraph_adjacency(incidence.pair);
        std::vector<EdgePairing> pairings = edge_indices(adjacency, incidence.pair);
        if (auto failure = check_conditions(system, adjacency, pairings)) {
            record(outcome.diagnoses, *failure);
            continue;
        }
        ++outcome.successes;
        if (!outcome.network)
            outcome.network = assemble_network(system, partition, sources, candidate, adjacency,
                                               pairings, incidence.layout);
    }

    if (outcome.successes > 0)
        outcome.status = RealizeOutcome::Status::realizable;
    return outcome;
}

} // namespace netreal
