#include "netreal/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace netreal {

namespace {

using json = nlohmann::ordered_json;

Scalar scalar_from(const json& value, const std::string& where) {
    if (value.is_number_integer())
        return Scalar::integer(value.get<std::int64_t>());
    if (value.is_number_unsigned()) {
        auto u = value.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw ParseError(where + ": integer out of range");
        return Scalar::integer(static_cast<std::int64_t>(u));
    }
    if (value.is_number_float())
        return Scalar::real(value.get<double>());
    if (value.is_object() && value.contains("num") && value.contains("den") && value.size() == 2 &&
        value["num"].is_number_integer() && value["den"].is_number_integer()) {
        if (value["den"].get<std::int64_t>() == 0)
            throw ParseError(where + ": zero denominator");
        return Scalar::rational(value["num"].get<std::int64_t>(), value["den"].get<std::int64_t>());
    }
    throw ParseError(where + ": expected a number or {\"num\",\"den\"} pair");
}

RealMatrix matrix_from(const json& value, const std::string& where) {
    if (!value.is_array())
        throw ParseError(where + ": expected an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < value.size(); ++r) {
        const json& row = value[r];
        if (!row.is_array())
            throw ParseError(where + ": row " + std::to_string(r + 1) + " is not an array");
        std::vector<Scalar> entries;
        for (std::size_t c = 0; c < row.size(); ++c)
            entries.push_back(scalar_from(row[c], where + "[" + std::to_string(r + 1) + "][" +
                                                      std::to_string(c + 1) + "]"));
        rows.push_back(std::move(entries));
    }
    try {
        return RealMatrix::from_rows(rows);
    } catch (const std::invalid_argument& err) {
        throw ParseError(where + ": " + err.what());
    }
}

IndexSet index_set_from(const json& value, int limit, const std::string& where) {
    if (!value.is_array())
        throw ParseError(where + ": expected an array of 1-based indices");
    std::vector<int> ix;
    for (const json& entry : value) {
        if (!entry.is_number_integer() && !entry.is_number_unsigned())
            throw ParseError(where + ": indices must be integers");
        int v = entry.get<int>();
        if (v < 1 || v > limit)
            throw ParseError(where + ": index " + std::to_string(v) + " out of range 1.." +
                             std::to_string(limit));
        ix.push_back(v - 1);
    }
    IndexSet out(ix);
    if (out.size() != static_cast<int>(ix.size()))
        throw ParseError(where + ": duplicate index");
    return out;
}

void check_keys(const json& object, const std::set<std::string>& allowed,
                const std::string& where) {
    for (const auto& item : object.items())
        if (!allowed.count(item.key()))
            throw ParseError(where + ": unknown field \"" + item.key() + "\"");
}

void check_header(const json& doc) {
    if (doc.contains("schema") && (!doc["schema"].is_number_integer() || doc["schema"] != 1))
        throw ParseError("unsupported schema version");
    if (doc.contains("index_base") &&
        (!doc["index_base"].is_number_integer() || doc["index_base"] != 1))
        throw ParseError("only index_base 1 is supported");
}

BoundarySystem boundary_system_from(const json& doc, std::optional<double> tol_override) {
    check_keys(doc, {"schema", "kind", "index_base", "m", "xi_out", "xi_in", "j_plus", "j_minus",
                     "speeds"},
               "boundary_system");
    for (const char* field : {"m", "xi_out", "xi_in", "j_plus", "j_minus", "speeds"})
        if (!doc.contains(field))
            throw ParseError(std::string("boundary_system: missing field \"") + field + "\"");

    BoundarySystem system;
    if (!doc["m"].is_number_integer() || doc["m"].get<int>() < 1)
        throw ParseError("boundary_system: m must be a positive integer");
    system.m = doc["m"].get<int>();
    system.xi_out = matrix_from(doc["xi_out"], "xi_out");
    system.xi_in = matrix_from(doc["xi_in"], "xi_in");
    system.j_plus = index_set_from(doc["j_plus"], 2 * system.m, "j_plus");
    system.j_minus = index_set_from(doc["j_minus"], 2 * system.m, "j_minus");
    if (!doc["speeds"].is_array())
        throw ParseError("speeds: expected an array");
    for (std::size_t i = 0; i < doc["speeds"].size(); ++i)
        system.speeds.push_back(
            scalar_from(doc["speeds"][i], "speeds[" + std::to_string(i + 1) + "]"));

    if (tol_override)
        system.tol = *tol_override;
    else
        system.tol = system.xi_out.all_exact() && system.xi_in.all_exact() ? 0.0 : 1e-12;
    try {
        validate(system);
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("boundary_system: ") + err.what());
    }
    return system;
}

std::string label_from(const json& value, const std::string& where) {
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_number_integer() || value.is_number_unsigned())
        return std::to_string(value.get<std::int64_t>());
    throw ParseError(where + ": vertex labels must be strings or integers");
}

MetricGraphProblem metric_graph_from(const json& doc, std::optional<double> tol_override) {
    check_keys(doc, {"schema", "kind", "index_base", "vertices", "edges", "vertex_conditions"},
               "metric_graph");
    for (const char* field : {"vertices", "edges", "vertex_conditions"})
        if (!doc.contains(field))
            throw ParseError(std::string("metric_graph: missing field \"") + field + "\"");

    MetricGraphProblem problem;
    if (!doc["vertices"].is_array() || doc["vertices"].empty())
        throw ParseError("vertices: expected a nonempty array");
    std::map<std::string, int> vertex_index;
    for (const json& entry : doc["vertices"]) {
        std::string label = label_from(entry, "vertices");
        if (vertex_index.count(label))
            throw ParseError("vertices: duplicate label \"" + label + "\"");
        vertex_index[label] = static_cast<int>(problem.vertex_labels.size());
        problem.vertex_labels.push_back(label);
    }

    if (!doc["edges"].is_array())
        throw ParseError("edges: expected an array");
    int expected_id = 1;
    for (const json& entry : doc["edges"]) {
        std::string where = "edges[" + std::to_string(expected_id) + "]";
        if (!entry.is_object())
            throw ParseError(where + ": expected an object");
        check_keys(entry, {"id", "tail", "head", "x0", "M", "lambda", "F"}, where);
        for (const char* field : {"id", "tail", "head", "x0"})
            if (!entry.contains(field))
                throw ParseError(where + ": missing field \"" + field + "\"");
        if (!entry["id"].is_number_integer() || entry["id"].get<int>() != expected_id)
            throw ParseError(where + ": edge ids must be 1-based and consecutive");
        ++expected_id;

        EdgeSpec edge;
        auto resolve = [&](const json& v, const char* what) {
            auto found = vertex_index.find(label_from(v, where + "." + what));
            if (found == vertex_index.end())
                throw ParseError(where + ": unknown vertex in \"" + what + "\"");
            return found->second;
        };
        edge.tail = resolve(entry["tail"], "tail");
        edge.head = resolve(entry["head"], "head");
        if (!entry["x0"].is_string() ||
            (entry["x0"] != "tail" && entry["x0"] != "head"))
            throw ParseError(where + ": x0 must be \"tail\" or \"head\"");
        edge.x0_at_tail = entry["x0"] == "tail";

        bool has_m = entry.contains("M");
        bool has_lambda = entry.contains("lambda");
        bool has_f = entry.contains("F");
        if (has_m == (has_lambda && has_f) || (has_lambda != has_f))
            throw ParseError(where + ": provide either \"M\" or both \"lambda\" and \"F\"");
        if (has_m)
            edge.m_matrix = matrix_from(entry["M"], where + ".M");
        else {
            if (!entry["lambda"].is_array() || entry["lambda"].size() != 2)
                throw ParseError(where + ": lambda must be [lambda_plus, lambda_minus]");
            edge.lambda = {scalar_from(entry["lambda"][0], where + ".lambda[1]").value(),
                           scalar_from(entry["lambda"][1], where + ".lambda[2]").value()};
            edge.f_matrix = matrix_from(entry["F"], where + ".F");
        }
        problem.edges.push_back(std::move(edge));
    }

    if (!doc["vertex_conditions"].is_array())
        throw ParseError("vertex_conditions: expected an array");
    for (const json& entry : doc["vertex_conditions"]) {
        if (!entry.is_object() || !entry.contains("vertex") || !entry.contains("phi"))
            throw ParseError("vertex_conditions: entries need \"vertex\" and \"phi\"");
        check_keys(entry, {"vertex", "phi"}, "vertex_conditions");
        auto found = vertex_index.find(label_from(entry["vertex"], "vertex_conditions"));
        if (found == vertex_index.end())
            throw ParseError("vertex_conditions: unknown vertex");
        if (problem.vertex_conditions.count(found->second))
            throw ParseError("vertex_conditions: vertex listed twice");
        problem.vertex_conditions[found->second] =
            matrix_from(entry["phi"], "phi of vertex " + found->first);
    }

    problem.tol = tol_override ? *tol_override : 1e-12;
    try {
        validate_structure(problem);
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("metric_graph: ") + err.what());
    }
    return problem;
}

json scalar_to_json(const Scalar& s) {
    if (s.is_integer())
        return json(s.num());
    if (s.exact())
        return json{{"num", s.num()}, {"den", s.den()}};
    return json(s.value());
}

json matrix_to_json(const RealMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json index_set_to_json(const IndexSet& s) {
    json out = json::array();
    for (int v : s)
        out.push_back(v + 1);
    return out;
}

// dump(2) would spread every matrix entry onto its own line; this emitter
// keeps arrays of leaves (numbers, strings, num/den pairs) on one line.
bool is_leaf(const json& v) {
    if (v.is_object())
        return v.contains("num") && v.contains("den") && v.size() == 2;
    return !v.is_array();
}

void emit(const json& v, int depth, std::string& out) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    if (v.is_object() && !is_leaf(v)) {
        out += "{\n";
        bool first = true;
        for (const auto& item : v.items()) {
            if (!first)
                out += ",\n";
            first = false;
            out += inner + json(item.key()).dump() + ": ";
            emit(item.value(), depth + 1, out);
        }
        out += "\n" + pad + "}";
        return;
    }
    if (v.is_array()) {
        bool flat = true;
        for (const json& element : v)
            flat = flat && is_leaf(element);
        if (flat) {
            out += v.dump();
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                out += ",\n";
            out += inner;
            emit(v[i], depth + 1, out);
        }
        out += "\n" + pad + "]";
        return;
    }
    out += v.dump();
}

std::string pretty(const json& doc) {
    std::string out;
    emit(doc, 0, out);
    out += "\n";
    return out;
}

} // namespace

ProblemFile parse_problem_text(const std::string& text, std::optional<double> tol_override) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("expected an object with a \"kind\" field");
    check_header(doc);
    std::string kind = doc["kind"].get<std::string>();
    if (kind == "boundary_system")
        return ProblemFile{boundary_system_from(doc, tol_override)};
    if (kind == "metric_graph")
        return ProblemFile{metric_graph_from(doc, tol_override)};
    throw ParseError("unknown kind \"" + kind + "\"");
}

ProblemFile load_problem_file(const std::string& path, std::optional<double> tol_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_text(buffer.str(), tol_override);
}

std::string canonical_json(const BoundarySystem& system) {
    json doc;
    doc["schema"] = 1;
    doc["kind"] = "boundary_system";
    doc["index_base"] = 1;
    doc["m"] = system.m;
    doc["xi_out"] = matrix_to_json(system.xi_out);
    doc["xi_in"] = matrix_to_json(system.xi_in);
    doc["j_plus"] = index_set_to_json(system.j_plus);
    doc["j_minus"] = index_set_to_json(system.j_minus);
    json speeds = json::array();
    for (const Scalar& c : system.speeds)
        speeds.push_back(scalar_to_json(c));
    doc["speeds"] = std::move(speeds);
    return pretty(doc);
}

std::string canonical_json(const MetricGraphProblem& problem) {
    json doc;
    doc["schema"] = 1;
    doc["kind"] = "metric_graph";
    doc["index_base"] = 1;
    doc["vertices"] = problem.vertex_labels;
    json edges = json::array();
    for (int j = 0; j < static_cast<int>(problem.edges.size()); ++j) {
        const EdgeSpec& e = problem.edges[static_cast<std::size_t>(j)];
        json entry;
        entry["id"] = j + 1;
        entry["tail"] = problem.vertex_labels[static_cast<std::size_t>(e.tail)];
        entry["head"] = problem.vertex_labels[static_cast<std::size_t>(e.head)];
        entry["x0"] = e.x0_at_tail ? "tail" : "head";
        if (e.m_matrix)
            entry["M"] = matrix_to_json(*e.m_matrix);
        else {
            entry["lambda"] = json::array({e.lambda->first, e.lambda->second});
            entry["F"] = matrix_to_json(*e.f_matrix);
        }
        edges.push_back(std::move(entry));
    }
    doc["edges"] = std::move(edges);
    json conditions = json::array();
    for (const auto& [vertex, phi] : problem.vertex_conditions) {
        json entry;
        entry["vertex"] = problem.vertex_labels[static_cast<std::size_t>(vertex)];
        entry["phi"] = matrix_to_json(phi);
        conditions.push_back(std::move(entry));
    }
    doc["vertex_conditions"] = std::move(conditions);
    return pretty(doc);
}

std::string network_json(const RealizedNetwork& network) {
    json doc;
    doc["schema"] = 1;
    doc["kind"] = "realized_network";
    doc["index_base"] = 1;
    json vertices = json::array();
    for (int v = 0; v < static_cast<int>(network.roles.size()); ++v) {
        json entry;
        entry["id"] = v + 1;
        entry["label"] = network.labels[static_cast<std::size_t>(v)];
        switch (network.roles[static_cast<std::size_t>(v)]) {
        case VertexRole::transient: entry["role"] = "transient"; break;
        case VertexRole::source: entry["role"] = "source"; break;
        case VertexRole::sink: entry["role"] = "sink"; break;
        }
        vertices.push_back(std::move(entry));
    }
    doc["vertices"] = std::move(vertices);
    json edges = json::array();
    for (int k = 0; k < static_cast<int>(network.edges.size()); ++k) {
        const RealizedEdge& e = network.edges[static_cast<std::size_t>(k)];
        json entry;
        entry["id"] = k + 1;
        entry["x0"] = e.x0_vertex + 1;
        entry["x1"] = e.x1_vertex + 1;
        entry["components"] = json::array({e.comp_first + 1, e.comp_second + 1});
        switch (e.kind) {
        case RealizedEdge::Kind::concurrent_plus: entry["kind"] = "concurrent+"; break;
        case RealizedEdge::Kind::concurrent_minus: entry["kind"] = "concurrent-"; break;
        case RealizedEdge::Kind::countercurrent: entry["kind"] = "countercurrent"; break;
        }
        edges.push_back(std::move(entry));
    }
    doc["edges"] = std::move(edges);
    json systems = json::array();
    for (const VertexSystem& vs : network.systems) {
        json entry;
        entry["vertex"] = vs.vertex + 1;
        entry["rows"] = index_set_to_json(vs.rows);
        entry["out_components"] = index_set_to_json(vs.out_cols);
        entry["in_components"] = index_set_to_json(vs.in_cols);
        entry["xi_out"] = matrix_to_json(vs.xi_out_block);
        entry["xi_in"] = matrix_to_json(vs.xi_in_block);
        systems.push_back(std::move(entry));
    }
    doc["vertex_systems"] = std::move(systems);
    doc["j_plus"] = index_set_to_json(network.j_plus);
    doc["j_minus"] = index_set_to_json(network.j_minus);
    json speeds = json::array();
    for (const Scalar& c : network.speeds)
        speeds.push_back(scalar_to_json(c));
    doc["speeds"] = std::move(speeds);
    return pretty(doc);
}

} // namespace netreal
