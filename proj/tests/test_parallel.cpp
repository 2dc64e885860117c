#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "commrank/centrality.hpp"
#include "commrank/exec.hpp"
#include "commrank/generators.hpp"
#include "commrank/louvain.hpp"
#include "commrank/metrics.hpp"
#include "commrank/paths.hpp"

using namespace commrank;

// The OpenMP kernels fill per-index slots and reduce serially, so they must
// reproduce the serial reference bit for bit, not merely within tolerance.

namespace {

std::vector<WeightedGraph> sample_graphs() {
    std::vector<WeightedGraph> graphs;
    graphs.push_back(erdos_renyi_gnm(120, 400, 1));
    graphs.push_back(erdos_renyi_gnm(80, 90, 2));  // sparse, disconnected
    graphs.push_back(watts_strogatz(100, 6, 0.2, 3));
    graphs.push_back(barabasi_albert(90, 2, 4));
    graphs.push_back(planted_partition(90, 6, 0.25, 0.02, 5).first);
    return graphs;
}

bool same_opt(const std::optional<double>& a, const std::optional<double>& b) {
    if (a.has_value() != b.has_value())
        return false;
    return !a.has_value() || *a == *b;
}

} // namespace

TEST_CASE("thread count is reported") {
    CHECK(exec_threads() >= 1);
}

TEST_CASE("hop matrices agree bitwise across execution modes") {
    for (const WeightedGraph& g : sample_graphs()) {
        HopMatrix s = hop_matrix(g, Exec::serial);
        HopMatrix p = hop_matrix(g, Exec::parallel);
        REQUIRE(s.size() == p.size());
        CHECK(s.data() == p.data());
    }
}

TEST_CASE("scalar measures agree bitwise across execution modes") {
    for (const WeightedGraph& g : sample_graphs()) {
        CHECK(clustering_coefficient(g, 0.0, Exec::serial) ==
              clustering_coefficient(g, 0.0, Exec::parallel));
        CHECK(local_efficiency(g, 0.0, Exec::serial) ==
              local_efficiency(g, 0.0, Exec::parallel));
        CHECK(global_efficiency(g, 0.0, Exec::serial) ==
              global_efficiency(g, 0.0, Exec::parallel));
        AverageDistance s = average_distance(g, 0.0, Exec::serial);
        AverageDistance p = average_distance(g, 0.0, Exec::parallel);
        CHECK(s.mean_distance == p.mean_distance);
        CHECK(s.reachable_pair_fraction == p.reachable_pair_fraction);
    }
}

TEST_CASE("block similarity matrices agree bitwise across execution modes") {
    WeightedGraph g = erdos_renyi_gnm(150, 600, 9);
    Partition a = louvain(g, 1).partition;
    Partition b = louvain(remove_edges(g, 0.4, 2), 2).partition;
    JiMatrix s(a, b, Exec::serial);
    JiMatrix p(a, b, Exec::parallel);
    CHECK(s.values() == p.values());
    CHECK(s.overlaps() == p.overlaps());
}

TEST_CASE("batch ranking agrees bitwise across execution modes") {
    auto [gt, planted] = planted_partition(90, 6, 0.25, 0.02, 11);
    Partition p0 = louvain(gt, 11).partition;
    std::vector<WeightedGraph> estimates;
    for (std::uint64_t s = 0; s < 8; ++s)
        estimates.push_back(remove_edges(gt, 0.3, 40 + s));

    std::vector<RankPoint> ser = rank_points(gt, p0, estimates, 11, 1.0, Exec::serial);
    std::vector<RankPoint> par = rank_points(gt, p0, estimates, 11, 1.0, Exec::parallel);
    REQUIRE(ser.size() == par.size());
    for (std::size_t i = 0; i < ser.size(); ++i) {
        CHECK(ser[i].md == par[i].md);
        CHECK(ser[i].jig == par[i].jig);
        CHECK(ser[i].gt_distance == par[i].gt_distance);
    }
}

TEST_CASE("measure vectors agree field by field across execution modes") {
    for (const WeightedGraph& g : sample_graphs()) {
        CmVector s = cm_vector(g, 21, {}, Exec::serial);
        CmVector p = cm_vector(g, 21, {}, Exec::parallel);
        CHECK(s.average_degree == p.average_degree);
        CHECK(same_opt(s.average_distance, p.average_distance));
        CHECK(same_opt(s.small_worldness, p.small_worldness));
        CHECK(s.clustering_coefficient == p.clustering_coefficient);
        CHECK(same_opt(s.assortativity, p.assortativity));
        CHECK(same_opt(s.global_efficiency, p.global_efficiency));
        CHECK(s.local_efficiency == p.local_efficiency);
        CHECK(same_opt(s.reachable_pair_fraction, p.reachable_pair_fraction));
    }
}

TEST_CASE("similarity tables agree cell by cell across execution modes") {
    WeightedGraph gt = watts_strogatz(100, 6, 0.1, 6);
    WeightedGraph a = remove_edges(gt, 0.5, 7);
    WeightedGraph b = erdos_renyi_gnm(100, 300, 8);
    CmSimilarityTable s =
        cm_similarity_table(gt, {{"a", &a}, {"b", &b}}, 13, {}, Exec::serial);
    CmSimilarityTable p =
        cm_similarity_table(gt, {{"a", &a}, {"b", &b}}, 13, {}, Exec::parallel);
    REQUIRE(s.labels == p.labels);
    for (std::size_t r = 0; r < s.deviation.size(); ++r)
        for (std::size_t c = 0; c < 7; ++c)
            CHECK(same_opt(s.deviation[r][c], p.deviation[r][c]));
}
