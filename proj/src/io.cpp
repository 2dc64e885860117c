#include "commrank/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "commrank/error.hpp"

namespace commrank {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && p == end;
}

bool parse_real(std::string_view s, double& out) {
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && p == end;
}

[[noreturn]] void bad_line(std::size_t ln, const std::string& what) {
    fail(Errc::malformed, "line " + std::to_string(ln) + ": " + what);
}

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Shortest decimal form that parses back to the same double.
std::string fmt_exact(double x) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string opt_cell(const std::optional<double>& v) {
    return v ? fmt12(*v) : std::string("NA");
}

// Walks text line by line, 1-based, tolerating missing trailing newline.
template <typename Fn>
void for_each_line(const std::string& text, Fn&& fn) {
    std::size_t ln = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string::npos ? text.size() : nl;
        ++ln;
        fn(ln, std::string_view(text).substr(pos, end - pos));
        if (nl == std::string::npos)
            break;
        pos = nl + 1;
    }
}

} // namespace

EdgeListData parse_edge_list_full(const std::string& text) {
    std::vector<EdgeInput> edges;
    std::set<std::pair<NodeId, NodeId>> seen;
    std::set<NodeId> extra_nodes;
    std::map<std::string, std::string> header;
    bool has_count = false;
    std::uint64_t declared_count = 0;

    for_each_line(text, [&](std::size_t ln, std::string_view raw) {
        const std::string_view line = trim(raw);
        if (line.empty())
            return;
        if (line.front() == '#') {
            const std::string_view body = trim(line.substr(1));
            const std::size_t eq = body.find('=');
            if (eq == std::string_view::npos)
                return;  // plain comment
            const std::string key(trim(body.substr(0, eq)));
            const std::string value(trim(body.substr(eq + 1)));
            if (key == "nodes") {
                if (!parse_u64(value, declared_count))
                    bad_line(ln, "invalid node count '" + value + "'");
                has_count = true;
            } else if (key == "node") {
                NodeId id;
                if (!parse_u64(value, id))
                    bad_line(ln, "invalid node id '" + value + "'");
                extra_nodes.insert(id);
            } else {
                header[key] = value;
            }
            return;
        }
        const auto tokens = split_ws(line);
        if (tokens.size() < 2 || tokens.size() > 3)
            bad_line(ln, "expected 'u v [weight]', got " + std::to_string(tokens.size()) +
                             " fields");
        NodeId u, v;
        if (!parse_u64(tokens[0], u))
            bad_line(ln, "invalid node id '" + std::string(tokens[0]) + "'");
        if (!parse_u64(tokens[1], v))
            bad_line(ln, "invalid node id '" + std::string(tokens[1]) + "'");
        double w = 1.0;
        if (tokens.size() == 3 && !parse_real(tokens[2], w))
            bad_line(ln, "invalid weight '" + std::string(tokens[2]) + "'");
        if (u == v)
            fail(Errc::self_loop,
                 "line " + std::to_string(ln) + ": self-loop at node " + std::to_string(u));
        if (!(w > 0.0))
            fail(Errc::non_positive_weight, "line " + std::to_string(ln) + ": edge " +
                                                std::to_string(u) + "-" + std::to_string(v) +
                                                " has non-positive weight");
        if (!seen.insert(std::minmax(u, v)).second)
            fail(Errc::duplicate_edge, "line " + std::to_string(ln) + ": duplicate edge " +
                                           std::to_string(u) + "-" + std::to_string(v));
        if (has_count && ((u >= declared_count && !extra_nodes.count(u)) ||
                          (v >= declared_count && !extra_nodes.count(v))))
            fail(Errc::unknown_endpoint,
                 "line " + std::to_string(ln) + ": endpoint outside the declared node set");
        edges.push_back({u, v, w});
    });

    std::set<NodeId> universe(extra_nodes);
    if (has_count)
        for (std::uint64_t i = 0; i < declared_count; ++i)
            universe.insert(i);
    for (const EdgeInput& e : edges) {
        universe.insert(e.u);
        universe.insert(e.v);
    }
    EdgeListData out;
    out.graph = WeightedGraph(std::vector<NodeId>(universe.begin(), universe.end()), edges);
    out.header = std::move(header);
    return out;
}

WeightedGraph parse_edge_list(const std::string& text) {
    return parse_edge_list_full(text).graph;
}

std::string write_edge_list(const WeightedGraph& g,
                            const std::map<std::string, std::string>& header) {
    std::string s;
    const std::size_t n = g.node_count();
    bool dense = true;
    for (std::size_t i = 0; i < n && dense; ++i)
        dense = g.id_at(i) == i;
    if (dense) {
        s += "# nodes=" + std::to_string(n) + "\n";
    } else {
        for (std::size_t i = 0; i < n; ++i)
            if (g.degree(i) == 0)
                s += "# node=" + std::to_string(g.id_at(i)) + "\n";
    }
    for (const auto& [key, value] : header)
        if (key != "nodes" && key != "node")
            s += "# " + key + "=" + value + "\n";
    for (const Edge& e : g.edges())
        s += std::to_string(g.id_at(e.u)) + " " + std::to_string(g.id_at(e.v)) + " " +
             fmt_exact(e.weight) + "\n";
    return s;
}

WeightedGraph parse_adjacency_csv(const std::string& text) {
    std::vector<std::vector<double>> a;
    for_each_line(text, [&](std::size_t ln, std::string_view raw) {
        const std::string_view line = trim(raw);
        if (line.empty())
            return;
        std::vector<double> row;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = line.find(',', pos);
            const std::string_view cell =
                trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
            double x;
            if (!parse_real(cell, x))
                bad_line(ln, "invalid matrix entry '" + std::string(cell) + "'");
            if (x < 0.0)
                fail(Errc::negative_entry, "line " + std::to_string(ln) +
                                               ": negative entry " + fmt_exact(x));
            row.push_back(x);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        a.push_back(std::move(row));
    });
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a[i].size() != n)
            fail(Errc::not_square, "matrix has " + std::to_string(n) + " rows but row " +
                                       std::to_string(i + 1) + " has " +
                                       std::to_string(a[i].size()) + " columns");
    for (std::size_t i = 0; i < n; ++i)
        if (a[i][i] != 0.0)
            fail(Errc::nonzero_diagonal,
                 "diagonal entry (" + std::to_string(i) + ", " + std::to_string(i) + ") is not 0");
    std::vector<EdgeInput> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(a[i][j] - a[j][i]) > 1e-9)
                fail(Errc::not_symmetric, "entries (" + std::to_string(i) + ", " +
                                              std::to_string(j) + ") and (" + std::to_string(j) +
                                              ", " + std::to_string(i) + ") differ");
            if (a[i][j] > 0.0)
                edges.push_back({i, j, a[i][j]});
        }
    std::vector<NodeId> nodes(n);
    for (std::size_t i = 0; i < n; ++i)
        nodes[i] = i;
    return WeightedGraph(std::move(nodes), edges);
}

std::string write_partition(const Partition& p) {
    Json j = Json::object();
    for (std::size_t i = 0; i < p.size(); ++i)
        j[std::to_string(p.universe()[i])] = p.community_at(i);
    return j.dump() + "\n";
}

Partition read_partition(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(Errc::malformed, std::string("partition is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail(Errc::malformed, "partition must be a JSON object mapping node id to community");
    std::vector<std::pair<NodeId, std::uint32_t>> entries;
    entries.reserve(j.size());
    for (const auto& [key, value] : j.items()) {
        NodeId id;
        if (!parse_u64(key, id))
            fail(Errc::malformed, "node key '" + key + "' is not a non-negative integer");
        if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
            fail(Errc::malformed, "community of node " + key + " must be a non-negative integer");
        entries.emplace_back(id, value.get<std::uint32_t>());
    }
    std::sort(entries.begin(), entries.end());
    std::vector<NodeId> universe;
    std::vector<std::uint32_t> labels;
    std::uint32_t max_label = 0;
    for (const auto& [id, c] : entries) {
        universe.push_back(id);
        labels.push_back(c);
        max_label = std::max(max_label, c);
    }
    if (!entries.empty()) {
        std::vector<bool> used(static_cast<std::size_t>(max_label) + 1, false);
        for (std::uint32_t c : labels)
            used[c] = true;
        for (std::size_t c = 0; c < used.size(); ++c)
            if (!used[c])
                fail(Errc::empty_block, "community indices are not dense: index " +
                                            std::to_string(c) + " is unused");
    }
    return Partition::from_assignment(std::move(universe), labels);
}

Partition read_partition(const std::string& text, const std::vector<NodeId>& universe) {
    Partition p = read_partition(text);
    if (p.universe() != universe) {
        for (NodeId id : universe)
            if (!std::binary_search(p.universe().begin(), p.universe().end(), id))
                fail(Errc::missing_node, "partition omits node " + std::to_string(id));
        for (NodeId id : p.universe())
            if (!std::binary_search(universe.begin(), universe.end(), id))
                fail(Errc::missing_node,
                     "partition names node " + std::to_string(id) + " absent from the graph");
    }
    return p;
}

std::string rank_report_csv(const RankReport& report) {
    std::string s = "# gt_q=" + fmt12(report.gt_q) +
                    " gt_blocks=" + std::to_string(report.gt_blocks) + "\n";
    s += "label,md,jig,gt_distance,n,m,family,seed,status\n";
    for (const RankRecord& r : report.records) {
        s += csv_field(r.label) + ",";
        if (r.ok)
            s += fmt12(r.md) + "," + fmt12(r.jig) + "," + fmt12(r.gt_distance) + ",";
        else
            s += ",,,";
        s += std::to_string(r.n) + "," + std::to_string(r.m) + "," + csv_field(r.family) + "," +
             csv_field(r.seed) + "," + csv_field(r.status) + "\n";
    }
    return s;
}

std::string rank_report_json(const RankReport& report) {
    Json j;
    j["gt_q"] = report.gt_q;
    j["gt_blocks"] = report.gt_blocks;
    j["records"] = Json::array();
    for (const RankRecord& r : report.records) {
        Json rec;
        rec["label"] = r.label;
        rec["family"] = r.family;
        rec["seed"] = r.seed;
        rec["ok"] = r.ok;
        rec["status"] = r.status;
        if (r.ok) {
            rec["md"] = r.md;
            rec["jig"] = r.jig;
            rec["gt_distance"] = r.gt_distance;
        } else {
            rec["md"] = nullptr;
            rec["jig"] = nullptr;
            rec["gt_distance"] = nullptr;
        }
        rec["n"] = r.n;
        rec["m"] = r.m;
        j["records"].push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

std::string ji_matrix_json(const JiMatrix& m, const std::string& label) {
    Json j;
    j["label"] = label;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["values"] = Json::array();
    j["overlaps"] = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json vals = Json::array();
        Json overs = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            vals.push_back(m.value(i, k));
            overs.push_back(m.overlap(i, k));
        }
        j["values"].push_back(std::move(vals));
        j["overlaps"].push_back(std::move(overs));
    }
    return j.dump(2) + "\n";
}

std::string similarity_table_csv(const CmSimilarityTable& table) {
    std::string s = "label";
    for (const char* name : kMeasureNames)
        s += std::string(",") + name;
    s += "\n";
    for (std::size_t r = 0; r < table.labels.size(); ++r) {
        s += csv_field(table.labels[r]);
        for (const auto& cell : table.deviation[r])
            s += "," + opt_cell(cell);
        s += "\n";
    }
    return s;
}

std::string raw_measures_csv(const CmSimilarityTable& table) {
    std::string s = "label";
    for (const char* name : kMeasureNames)
        s += std::string(",") + name;
    s += ",reachable_pair_fraction\n";
    for (std::size_t r = 0; r < table.labels.size(); ++r) {
        s += csv_field(table.labels[r]);
        for (const auto& value : measures_of(table.raw[r]))
            s += "," + opt_cell(value);
        s += "," + opt_cell(table.raw[r].reachable_pair_fraction);
        s += "\n";
    }
    return s;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(Errc::malformed, "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        fail(Errc::malformed, "cannot write file '" + path + "'");
    out << content;
    if (!out)
        fail(Errc::malformed, "short write to file '" + path + "'");
}

EdgeListData load_graph_file(const std::string& path) {
    const std::string text = read_text_file(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        return {parse_adjacency_csv(text), {}};
    return parse_edge_list_full(text);
}

} // namespace commrank
