#ifndef COMMRANK_IO_HPP
#define COMMRANK_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "commrank/centrality.hpp"
#include "commrank/graph.hpp"
#include "commrank/metrics.hpp"
#include "commrank/partition.hpp"

namespace commrank {

/// Edge-list text: whitespace-separated "u v w" lines (w optional, default 1),
/// '#'-prefixed comments. "# nodes=N" declares the node set {0..N-1} so
/// isolated nodes survive; "# node=ID" declares a single extra node. Other
/// "# key=value" comments are collected as header metadata.
struct EdgeListData {
    WeightedGraph graph;
    std::map<std::string, std::string> header;
};

EdgeListData parse_edge_list_full(const std::string& text);
WeightedGraph parse_edge_list(const std::string& text);

/// Canonical serialization: node-count header, sorted "# key=value" metadata,
/// canonical edge order, weights rendered exactly (round-trip safe).
std::string write_edge_list(const WeightedGraph& g,
                            const std::map<std::string, std::string>& header = {});

/// Square, symmetric (within 1e-9), zero-diagonal, non-negative matrix;
/// entry (i, j) > 0 becomes the weight of edge {i, j}.
WeightedGraph parse_adjacency_csv(const std::string& text);

/// JSON object mapping node id to dense community index, e.g. {"0":0,"1":0}.
std::string write_partition(const Partition& p);

/// Inverse of write_partition. Community indices must be dense from 0
/// (EmptyBlock otherwise); node keys define the universe.
Partition read_partition(const std::string& text);

/// As above, but the mapping must cover exactly the given universe
/// (MissingNode otherwise).
Partition read_partition(const std::string& text, const std::vector<NodeId>& universe);

/// One scored estimate of the reference graph.
struct RankRecord {
    std::string label;
    std::string family;  // generator/perturbation family from the file header
    std::string seed;    // generator seed from the file header, if any
    bool ok = true;
    std::string status = "ok";  // "ok" or the error that failed this record
    double md = 0.0;
    double jig = 0.0;
    double gt_distance = 0.0;
    std::size_t n = 0;
    std::size_t m = 0;
};

/// Figure-style scatter data: one record per graph, reference first.
struct RankReport {
    double gt_q = 0.0;          // modularity of the shared reference partition
    std::size_t gt_blocks = 0;  // its community count
    std::vector<RankRecord> records;
};

std::string rank_report_csv(const RankReport& report);
std::string rank_report_json(const RankReport& report);

/// Block-overlap similarity matrix of one estimate, as JSON.
std::string ji_matrix_json(const JiMatrix& m, const std::string& label);

/// Deviation-from-reference table; undefined cells hold the token NA.
std::string similarity_table_csv(const CmSimilarityTable& table);
/// Raw measure values behind the table, same row order.
std::string raw_measures_csv(const CmSimilarityTable& table);

/// Whole-file helpers; reading a missing/unreadable file throws Malformed.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Parses a graph file by extension: ".csv" as adjacency matrix, anything
/// else as edge list.
EdgeListData load_graph_file(const std::string& path);

} // namespace commrank

#endif // COMMRANK_IO_HPP
