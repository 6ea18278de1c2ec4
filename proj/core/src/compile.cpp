#include "netreal/compile.hpp"

#include "netreal/binmat.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace netreal {

namespace {

Eigen::MatrixXd to_eigen(const RealMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out(r, c) = m.at(r, c).value();
    return out;
}

RealMatrix from_eigen(const Eigen::MatrixXd& m) {
    RealMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out.at(r, c) = Scalar::real(m(r, c));
    return out;
}

void normalize_column(double f[2]) {
    double norm = std::hypot(f[0], f[1]);
    f[0] /= norm;
    f[1] /= norm;
    double lead = std::fabs(f[0]) > 1e-12 ? f[0] : f[1];
    if (lead < 0.0) {
        f[0] = -f[0];
        f[1] = -f[1];
    }
}

} // namespace

EdgeEigen diagonalize_edge(const RealMatrix& m, double tol) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("transport matrices must be 2x2");
    double a = m.at(0, 0).value();
    double b = m.at(0, 1).value();
    double c = m.at(1, 0).value();
    double d = m.at(1, 1).value();
    double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d), 1.0});
    double disc = (a - d) * (a - d) + 4.0 * b * c;
    if (disc <= (tol * scale) * (tol * scale))
        throw std::invalid_argument(
            "transport matrix is not strictly hyperbolic (repeated or complex eigenvalues)");
    double root = std::sqrt(disc);
    EdgeEigen out;
    out.lambda_plus = ((a + d) + root) / 2.0;
    out.lambda_minus = ((a + d) - root) / 2.0;

    for (int slot = 0; slot < 2; ++slot) {
        double lambda = slot == 0 ? out.lambda_plus : out.lambda_minus;
        // (M - lambda I) f = 0; take the better-conditioned row as the normal.
        double f_from_row0[2] = {b, lambda - a};
        double f_from_row1[2] = {lambda - d, c};
        double n0 = std::hypot(f_from_row0[0], f_from_row0[1]);
        double n1 = std::hypot(f_from_row1[0], f_from_row1[1]);
        double* f = n0 >= n1 ? f_from_row0 : f_from_row1;
        out.f[0][slot] = f[0];
        out.f[1][slot] = f[1];
        double col[2] = {out.f[0][slot], out.f[1][slot]};
        normalize_column(col);
        out.f[0][slot] = col[0];
        out.f[1][slot] = col[1];
    }
    return out;
}

namespace {

EdgeEigen edge_eigen_of(const MetricGraphProblem& problem, int edge) {
    const EdgeSpec& spec = problem.edges[static_cast<std::size_t>(edge)];
    if (spec.m_matrix)
        return diagonalize_edge(*spec.m_matrix, problem.tol);
    EdgeEigen out;
    out.lambda_plus = spec.lambda->first;
    out.lambda_minus = spec.lambda->second;
    if (!(out.lambda_plus > out.lambda_minus))
        throw std::invalid_argument("edge eigenvalues must satisfy lambda_plus > lambda_minus");
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.f[r][c] = spec.f_matrix->at(r, c).value();
    double det = out.f[0][0] * out.f[1][1] - out.f[0][1] * out.f[1][0];
    double scale = std::max({std::fabs(out.f[0][0]), std::fabs(out.f[0][1]),
                             std::fabs(out.f[1][0]), std::fabs(out.f[1][1]), 1.0});
    if (std::fabs(det) <= problem.tol * scale * scale)
        throw std::invalid_argument("edge eigenvector matrix is singular");
    return out;
}

bool slot_outgoing(int alpha, int endpoint, int slot) {
    if (alpha == 2)
        return endpoint == 0;
    if (alpha == 0)
        return endpoint == 1;
    return (endpoint == 0) == (slot == 0);
}

} // namespace

Classification classify(const MetricGraphProblem& problem) {
    validate_structure(problem);
    int m = static_cast<int>(problem.edges.size());
    int r = vertex_count(problem);

    Classification cls;
    cls.eigen.reserve(static_cast<std::size_t>(m));
    cls.alpha.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        EdgeEigen eig = edge_eigen_of(problem, j);
        double scale = std::max({std::fabs(eig.lambda_plus), std::fabs(eig.lambda_minus), 1.0});
        if (std::fabs(eig.lambda_plus) <= problem.tol * scale ||
            std::fabs(eig.lambda_minus) <= problem.tol * scale)
            throw std::invalid_argument("edge " + std::to_string(j + 1) +
                                        " has a zero characteristic speed");
        int alpha = (eig.lambda_plus > 0.0 ? 1 : 0) + (eig.lambda_minus > 0.0 ? 1 : 0);
        cls.eigen.push_back(eig);
        cls.alpha.push_back(alpha);
    }

    // Components running 0 -> 1 first (fast invariants of mixed/positive edges,
    // then slow invariants of positive edges), then the 1 -> 0 group.
    cls.comp_of_slot.assign(static_cast<std::size_t>(2 * m), -1);
    int counter = 0;
    for (int j = 0; j < m; ++j)
        if (cls.alpha[static_cast<std::size_t>(j)] >= 1)
            cls.comp_of_slot[static_cast<std::size_t>(2 * j)] = counter++;
    for (int j = 0; j < m; ++j)
        if (cls.alpha[static_cast<std::size_t>(j)] == 2)
            cls.comp_of_slot[static_cast<std::size_t>(2 * j + 1)] = counter++;
    int m_plus = counter;
    for (int j = 0; j < m; ++j)
        if (cls.alpha[static_cast<std::size_t>(j)] == 0)
            cls.comp_of_slot[static_cast<std::size_t>(2 * j)] = counter++;
    for (int j = 0; j < m; ++j)
        if (cls.alpha[static_cast<std::size_t>(j)] <= 1)
            cls.comp_of_slot[static_cast<std::size_t>(2 * j + 1)] = counter++;
    if (counter != 2 * m)
        throw std::logic_error("component renumbering did not cover every slot");

    std::vector<int> plus_ix, minus_ix;
    for (int p = 0; p < m_plus; ++p)
        plus_ix.push_back(p);
    for (int p = m_plus; p < 2 * m; ++p)
        minus_ix.push_back(p);
    cls.j_plus = IndexSet(std::move(plus_ix));
    cls.j_minus = IndexSet(std::move(minus_ix));

    cls.slot_of_comp.assign(static_cast<std::size_t>(2 * m), {-1, -1});
    cls.speeds.assign(static_cast<std::size_t>(2 * m), Scalar());
    for (int j = 0; j < m; ++j)
        for (int slot = 0; slot < 2; ++slot) {
            int comp = cls.comp_of_slot[static_cast<std::size_t>(2 * j + slot)];
            cls.slot_of_comp[static_cast<std::size_t>(comp)] = {j, slot};
            double lambda = slot == 0 ? cls.eigen[static_cast<std::size_t>(j)].lambda_plus
                                      : cls.eigen[static_cast<std::size_t>(j)].lambda_minus;
            cls.speeds[static_cast<std::size_t>(comp)] = Scalar::real(std::fabs(lambda));
        }

    cls.roles.assign(static_cast<std::size_t>(r), VertexRole::transient);
    cls.k_v.assign(static_cast<std::size_t>(r), 0);
    cls.outgoing_components.assign(static_cast<std::size_t>(r), {});
    cls.incoming_components.assign(static_cast<std::size_t>(r), {});
    for (int v = 0; v < r; ++v) {
        int kv_incidence = 0;
        int kv_split = 0;
        for (int j : incident_edges(problem, v)) {
            int alpha = cls.alpha[static_cast<std::size_t>(j)];
            int l = endpoint_parameter(problem.edges[static_cast<std::size_t>(j)], v);
            kv_incidence += 2 * (1 - alpha) * l + alpha;
            kv_split += l == 0 ? alpha : 2 - alpha;
            for (int slot = 0; slot < 2; ++slot) {
                int comp = cls.comp_of_slot[static_cast<std::size_t>(2 * j + slot)];
                if (slot_outgoing(alpha, l, slot))
                    cls.outgoing_components[static_cast<std::size_t>(v)].push_back(comp);
                else
                    cls.incoming_components[static_cast<std::size_t>(v)].push_back(comp);
            }
        }
        int flagged =
            static_cast<int>(cls.outgoing_components[static_cast<std::size_t>(v)].size());
        if (kv_incidence != kv_split || kv_incidence != flagged)
            throw std::logic_error("outgoing-value counts disagree at vertex " +
                                   std::to_string(v + 1));
        cls.k_v[static_cast<std::size_t>(v)] = kv_incidence;
        bool any_out = flagged > 0;
        bool any_in = !cls.incoming_components[static_cast<std::size_t>(v)].empty();
        if (any_out && !any_in)
            cls.roles[static_cast<std::size_t>(v)] = VertexRole::source;
        else if (!any_out && any_in)
            cls.roles[static_cast<std::size_t>(v)] = VertexRole::sink;
    }
    return cls;
}

int count_outgoing(const MetricGraphProblem& problem, const Classification& classification,
                   int vertex) {
    int kv = 0;
    for (int j : incident_edges(problem, vertex)) {
        int alpha = classification.alpha[static_cast<std::size_t>(j)];
        int l = endpoint_parameter(problem.edges[static_cast<std::size_t>(j)], vertex);
        kv += 2 * (1 - alpha) * l + alpha;
    }
    if (kv != classification.k_v[static_cast<std::size_t>(vertex)])
        throw std::logic_error("outgoing-value count mismatch");
    return kv;
}

VertexAssembly build_contraction(const MetricGraphProblem& problem,
                                 const Classification& classification, int vertex) {
    std::vector<int> edges = incident_edges(problem, vertex);
    int valence = static_cast<int>(edges.size());
    int k = classification.k_v[static_cast<std::size_t>(vertex)];
    bool is_sink = classification.roles[static_cast<std::size_t>(vertex)] == VertexRole::sink;

    VertexAssembly assembly;
    assembly.vertex = vertex;
    assembly.k_v = k;
    assembly.f_out = RealMatrix(2 * valence, k);
    assembly.f_in = RealMatrix(2 * valence, 2 * valence - k);

    int out_col = 0;
    int in_col = 0;
    for (int pos = 0; pos < valence; ++pos) {
        int j = edges[static_cast<std::size_t>(pos)];
        const EdgeEigen& eig = classification.eigen[static_cast<std::size_t>(j)];
        int alpha = classification.alpha[static_cast<std::size_t>(j)];
        int l = endpoint_parameter(problem.edges[static_cast<std::size_t>(j)], vertex);
        for (int slot = 0; slot < 2; ++slot) {
            int comp = classification.comp_of_slot[static_cast<std::size_t>(2 * j + slot)];
            bool outgoing = slot_outgoing(alpha, l, slot);
            RealMatrix& target = outgoing ? assembly.f_out : assembly.f_in;
            int col = outgoing ? out_col++ : in_col++;
            target.at(2 * pos, col) = Scalar::real(eig.f[0][slot]);
            target.at(2 * pos + 1, col) = Scalar::real(eig.f[1][slot]);
            (outgoing ? assembly.out_components : assembly.in_components).push_back(comp);
        }
    }

    auto condition = problem.vertex_conditions.find(vertex);
    if (is_sink) {
        if (condition != problem.vertex_conditions.end())
            throw std::invalid_argument("no boundary conditions may be attached to sink vertex " +
                                        std::to_string(vertex + 1));
        assembly.psi_out = RealMatrix(0, 0);
        assembly.psi_in = RealMatrix(0, 2 * valence - k);
        return assembly;
    }
    if (condition == problem.vertex_conditions.end())
        throw std::invalid_argument("missing boundary conditions at vertex " +
                                    std::to_string(vertex + 1));
    const RealMatrix& phi = condition->second;
    if (phi.rows() != k || phi.cols() != 2 * valence)
        throw std::invalid_argument("condition matrix at vertex " + std::to_string(vertex + 1) +
                                    " must be " + std::to_string(k) + "x" +
                                    std::to_string(2 * valence));
    Eigen::MatrixXd phi_e = to_eigen(phi);
    assembly.psi_out = from_eigen(phi_e * to_eigen(assembly.f_out));
    if (assembly.f_in.cols() == 0)
        assembly.psi_in = RealMatrix(k, 0);
    else
        assembly.psi_in = from_eigen(phi_e * to_eigen(assembly.f_in));
    return assembly;
}

WellposedResult wellposed(const VertexAssembly& assembly) {
    WellposedResult result;
    int k = assembly.psi_out.rows();
    if (k == 0) { // a sink imposes nothing
        result.det = 1.0;
        result.threshold = 1e-9;
        result.ok = true;
        result.solved_map = RealMatrix(0, assembly.psi_in.cols());
        return result;
    }
    Eigen::MatrixXd psi_out = to_eigen(assembly.psi_out);
    double threshold = 1e-9;
    for (int r = 0; r < k; ++r)
        threshold *= psi_out.row(r).norm();
    result.threshold = threshold;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(psi_out);
    result.det = lu.determinant();
    result.ok = std::fabs(result.det) > threshold;
    if (!result.ok)
        return result;
    if (assembly.psi_in.cols() == 0)
        result.solved_map = RealMatrix(k, 0);
    else
        result.solved_map = from_eigen(Eigen::MatrixXd(-lu.solve(to_eigen(assembly.psi_in))));
    return result;
}

bool CompiledSystem::all_wellposed() const {
    for (const WellposedResult& wp : wellposedness)
        if (!wp.ok)
            return false;
    return true;
}

CompiledSystem assemble_global(const MetricGraphProblem& problem) {
    CompiledSystem compiled;
    compiled.classification = classify(problem);
    int r = vertex_count(problem);
    int m = static_cast<int>(problem.edges.size());

    int total_rows = 0;
    for (int v = 0; v < r; ++v) {
        if (compiled.classification.roles[static_cast<std::size_t>(v)] == VertexRole::sink) {
            if (problem.vertex_conditions.count(v))
                throw std::invalid_argument(
                    "no boundary conditions may be attached to sink vertex " +
                    std::to_string(v + 1));
            continue;
        }
        compiled.assembled_vertices.push_back(v);
        compiled.assemblies.push_back(build_contraction(problem, compiled.classification, v));
        compiled.wellposedness.push_back(wellposed(compiled.assemblies.back()));
        total_rows += compiled.assemblies.back().k_v;
    }
    if (total_rows != 2 * m)
        throw std::logic_error("vertex condition counts do not sum to the component count");
    if (!compiled.all_wellposed())
        return compiled;

    BoundarySystem system;
    system.m = m;
    system.xi_out = RealMatrix(2 * m, 2 * m);
    system.xi_in = RealMatrix(2 * m, 2 * m);
    system.j_plus = compiled.classification.j_plus;
    system.j_minus = compiled.classification.j_minus;
    system.speeds = compiled.classification.speeds;
    system.tol = problem.tol;

    std::vector<int> out_seen(static_cast<std::size_t>(2 * m), 0);
    std::vector<int> in_seen(static_cast<std::size_t>(2 * m), 0);
    int row_offset = 0;
    for (const VertexAssembly& assembly : compiled.assemblies) {
        for (int c = 0; c < static_cast<int>(assembly.out_components.size()); ++c) {
            int comp = assembly.out_components[static_cast<std::size_t>(c)];
            ++out_seen[static_cast<std::size_t>(comp)];
            for (int rl = 0; rl < assembly.k_v; ++rl)
                system.xi_out.at(row_offset + rl, comp) = assembly.psi_out.at(rl, c);
        }
        for (int c = 0; c < static_cast<int>(assembly.in_components.size()); ++c) {
            int comp = assembly.in_components[static_cast<std::size_t>(c)];
            ++in_seen[static_cast<std::size_t>(comp)];
            for (int rl = 0; rl < assembly.k_v; ++rl)
                system.xi_in.at(row_offset + rl, comp) = assembly.psi_in.at(rl, c);
        }
        row_offset += assembly.k_v;
    }
    for (int comp = 0; comp < 2 * m; ++comp) {
        if (out_seen[static_cast<std::size_t>(comp)] != 1)
            throw std::logic_error("component must be outgoing at exactly one vertex");
        if (in_seen[static_cast<std::size_t>(comp)] > 1)
            throw std::logic_error("component incoming at several vertices");
    }
    validate(system);
    compiled.system = std::move(system);
    return compiled;
}

std::vector<VertexCheck> check_vertex_assumptions(const CompiledSystem& compiled, double tol) {
    std::vector<VertexCheck> checks;
    for (std::size_t i = 0; i < compiled.assemblies.size(); ++i) {
        const VertexAssembly& assembly = compiled.assemblies[i];
        VertexCheck check;
        check.vertex = assembly.vertex;
        check.role =
            compiled.classification.roles[static_cast<std::size_t>(assembly.vertex)];

        BinaryMatrix out_hat = hat(assembly.psi_out, tol);
        BinaryMatrix in_hat = hat(assembly.psi_in, tol);
        for (int r = 0; r < out_hat.rows() && check.ass1_ok; ++r)
            if (out_hat.row_is_zero(r)) {
                check.ass1_ok = false;
                check.ass1_detail = "condition row " + std::to_string(r + 1) +
                                    " involves no outgoing value";
            }
        for (int c = 0; c < out_hat.cols() && check.ass1_ok; ++c)
            if (out_hat.col_is_zero(c)) {
                check.ass1_ok = false;
                check.ass1_detail =
                    "outgoing component " +
                    std::to_string(assembly.out_components[static_cast<std::size_t>(c)] + 1) +
                    " appears in no condition";
            }

        if (check.role == VertexRole::source) {
            BinaryMatrix conn = pattern_product(out_hat.transposed(), out_hat);
            IrreducibilityResult irr = check_irreducible(conn);
            check.connectivity_ok = irr.irreducible;
            if (!irr.irreducible)
                check.connectivity_detail =
                    "outflow splits into " + std::to_string(irr.components.size()) +
                    " non-communicating groups";
        } else {
            BinaryMatrix conn = pattern_product(out_hat.transposed(), in_hat);
            auto gap = full_connectivity_failure(conn);
            check.connectivity_ok = !gap.has_value();
            if (gap)
                check.connectivity_detail =
                    "incoming component " +
                    std::to_string(assembly.in_components[static_cast<std::size_t>(gap->col)] +
                                   1) +
                    " never feeds outgoing component " +
                    std::to_string(assembly.out_components[static_cast<std::size_t>(gap->row)] +
                                   1);
        }

        for (int r = 0; r < out_hat.rows() && !check.kirchhoff_row; ++r) {
            if (out_hat.row_support(r).size() == out_hat.cols() &&
                in_hat.row_support(r).size() == in_hat.cols())
                check.kirchhoff_row = r;
        }
        checks.push_back(std::move(check));
    }
    return checks;
}

} // namespace netreal
