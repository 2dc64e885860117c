#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "commrank/generators.hpp"
#include "commrank/louvain.hpp"
#include "commrank/metrics.hpp"
#include "commrank/rng.hpp"

using namespace commrank;

namespace {

WeightedGraph two_triangles() {
    return WeightedGraph::dense(6, {{0, 1, 1.0},
                                    {0, 2, 1.0},
                                    {1, 2, 1.0},
                                    {3, 4, 1.0},
                                    {3, 5, 1.0},
                                    {4, 5, 1.0}});
}

WeightedGraph gnp(std::uint64_t seed, std::size_t n, double p) {
    Rng rng(seed);
    std::vector<EdgeInput> edges;
    for (NodeId v = 1; v < n; ++v)
        for (NodeId u = 0; u < v; ++u)
            if (rng.bernoulli(p))
                edges.push_back({u, v, 1.0});
    return WeightedGraph::dense(n, edges);
}

} // namespace

TEST_CASE("jaccard index on sorted id sets") {
    CHECK(jaccard_index({1, 2, 3}, {2, 3, 4}) == 0.5);
    CHECK(jaccard_index({1, 2}, {3, 4}) == 0.0);
    CHECK(jaccard_index({5, 6}, {5, 6}) == 1.0);
    CHECK(jaccard_index({}, {1}) == 0.0);
    try {
        jaccard_index({}, {});
        FAIL("two empty sets accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::both_empty);
    }
}

TEST_CASE("block similarity matrix on a hand-worked example") {
    Partition gt = Partition::from_blocks({{0, 1}, {2, 3}});
    Partition est = Partition::from_blocks({{0}, {1, 2, 3}});
    JiMatrix m(gt, est);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    CHECK(m.value(0, 0) == 0.5);       // {0,1} vs {0}
    CHECK(m.value(0, 1) == 0.25);      // {0,1} vs {1,2,3}
    CHECK(m.value(1, 0) == 0.0);       // {2,3} vs {0}
    CHECK(m.value(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(m.overlap(0, 0) == 1);
    CHECK(m.overlap(0, 1) == 1);
    CHECK(m.overlap(1, 0) == 0);
    CHECK(m.overlap(1, 1) == 2);

    auto top = m.top_entries(2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].gt_block == 1);
    CHECK(top[0].est_block == 1);
    CHECK(top[1].gt_block == 0);
    CHECK(top[1].est_block == 0);
    // Cells with empty overlap are never reported, however large k is.
    CHECK(m.top_entries(100).size() == 3);
}

TEST_CASE("partition similarity anchors are exact") {
    // n singleton blocks against one block: every overlap is 1 and every
    // index is 1/n, so the score is sqrt(n * (1/n) / n) = 1/sqrt(n).
    std::vector<NodeId> u16(16);
    for (NodeId i = 0; i < 16; ++i)
        u16[i] = i;
    CHECK(jig(Partition::singletons(u16), Partition::single_block(u16)) == 0.25);

    Partition pairs = Partition::from_blocks({{0, 1}, {2, 3}});
    Partition quad = Partition::single_block({0, 1, 2, 3});
    CHECK(jig(pairs, quad) == std::sqrt(0.5));
}

TEST_CASE("partition similarity is symmetric, bounded, and 1 only on equality") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Rng rng(seed);
        std::vector<NodeId> universe(20);
        for (NodeId i = 0; i < 20; ++i)
            universe[i] = i;
        std::vector<std::uint32_t> la(20), lb(20);
        for (auto& l : la)
            l = static_cast<std::uint32_t>(rng.next_below(4));
        for (auto& l : lb)
            l = static_cast<std::uint32_t>(rng.next_below(4));
        Partition a = Partition::from_assignment(universe, la);
        Partition b = Partition::from_assignment(universe, lb);

        const double s = jig(a, b);
        // Swapping the arguments transposes the summation order, so the
        // scores agree to rounding rather than bit for bit.
        CHECK(std::abs(s - jig(b, a)) <= 1e-12);
        CHECK(s > 0.0);
        CHECK(s <= 1.0);
        CHECK(jig(a, a) == 1.0);
        if (!(a == b))
            CHECK(s < 1.0);
    }

    Partition a = Partition::single_block({0, 1});
    Partition c = Partition::single_block({0, 1, 2});
    try {
        jig(a, c);
        FAIL("different universes accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::universe_mismatch);
    }
    CHECK_THROWS_AS(jig(Partition(), Partition()), Error);
}

TEST_CASE("modularity shift anchors") {
    WeightedGraph tt = two_triangles();
    Partition comps = Partition::from_blocks({{0, 1, 2}, {3, 4, 5}});

    // Adding a bridge between the triangles moves Q from 1/2 to 5/14.
    std::vector<EdgeInput> bridged = {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}, {3, 4, 1.0},
                                      {3, 5, 1.0}, {4, 5, 1.0}, {2, 3, 1.0}};
    WeightedGraph gb = WeightedGraph::dense(6, bridged);
    CHECK(modularity_distance(gb, tt, comps) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));

    // Filling in the complete graph moves Q from 1/2 to -1/10.
    std::vector<EdgeInput> k6;
    for (NodeId v = 1; v < 6; ++v)
        for (NodeId u = 0; u < v; ++u)
            k6.push_back({u, v, 1.0});
    WeightedGraph gk = WeightedGraph::dense(6, k6);
    CHECK(modularity_distance(gk, tt, comps) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("modularity shift is a pseudometric for a fixed reference partition") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        WeightedGraph a = gnp(seed * 3 + 1, 12, 0.3);
        WeightedGraph b = gnp(seed * 3 + 2, 12, 0.4);
        WeightedGraph c = gnp(seed * 3 + 3, 12, 0.5);
        if (a.edge_count() == 0 || b.edge_count() == 0 || c.edge_count() == 0)
            continue;
        Partition p0 = louvain(a, 7).partition;

        CHECK(modularity_distance(a, a, p0) == 0.0);
        const double ab = modularity_distance(a, b, p0);
        const double bc = modularity_distance(b, c, p0);
        const double ac = modularity_distance(a, c, p0);
        CHECK(ab >= 0.0);
        CHECK(ab == modularity_distance(b, a, p0));
        CHECK(ac <= ab + bc + 1e-12);
    }

    WeightedGraph a = gnp(1, 6, 0.8);
    WeightedGraph other({0, 1, 2, 3, 4, 9}, {{0, 1, 1.0}});
    Partition p0 = Partition::single_block(a.nodes());
    try {
        modularity_distance(a, other, p0);
        FAIL("different node sets accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::node_set_mismatch);
    }
}

TEST_CASE("the reference graph scores at the ideal point") {
    WeightedGraph gt = gnp(11, 30, 0.2);
    Partition p0 = louvain(gt, 42).partition;
    RankPoint r = rank_point(gt, p0, gt, 42);
    CHECK(r.md == 0.0);
    CHECK(r.jig == 1.0);
    CHECK(r.gt_distance == 0.0);
}

TEST_CASE("a degraded graph scores strictly away from the ideal point") {
    auto [gt, planted] = planted_partition(60, 4, 0.3, 0.02, 5);
    Partition p0 = louvain(gt, 5).partition;
    WeightedGraph degraded = remove_edges(gt, 0.5, 99);
    RankPoint r = rank_point(gt, p0, degraded, 5);
    CHECK(r.gt_distance > 0.0);
    CHECK(r.jig < 1.0);
    CHECK(r.gt_distance ==
          doctest::Approx(std::hypot(r.md, 1.0 - r.jig)).epsilon(1e-15));
}

TEST_CASE("batch ranking equals one-by-one ranking bit for bit") {
    WeightedGraph gt = gnp(21, 40, 0.15);
    Partition p0 = louvain(gt, 9).partition;
    std::vector<WeightedGraph> estimates;
    for (std::uint64_t s = 0; s < 6; ++s)
        estimates.push_back(remove_edges(gt, 0.1 + 0.1 * static_cast<double>(s), 50 + s));

    for (Exec exec : {Exec::serial, Exec::parallel}) {
        std::vector<RankPoint> batch = rank_points(gt, p0, estimates, 9, 1.0, exec);
        REQUIRE(batch.size() == estimates.size());
        for (std::size_t i = 0; i < estimates.size(); ++i) {
            RankPoint one = rank_point(gt, p0, estimates[i], 9);
            CHECK(batch[i].md == one.md);
            CHECK(batch[i].jig == one.jig);
            CHECK(batch[i].gt_distance == one.gt_distance);
        }
    }
}
