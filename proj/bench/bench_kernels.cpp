// Compares the serial reference implementations against the OpenMP kernels
// and verifies that both paths produce bit-identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "commrank/centrality.hpp"
#include "commrank/exec.hpp"
#include "commrank/generators.hpp"
#include "commrank/louvain.hpp"
#include "commrank/metrics.hpp"
#include "commrank/paths.hpp"

namespace {

using namespace commrank;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    return seconds_since(start);
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0,
                identical ? "bit-identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1500;
    std::size_t m = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 12 * n;
    std::printf("kernel benchmark: G(n=%zu, m=%zu), %d thread(s)\n", n, m, exec_threads());

    const WeightedGraph g = erdos_renyi_gnm(n, m, 7);

    bool all_ok = true;

    {
        HopMatrix serial_m, parallel_m;
        const double ts = timed([&] { serial_m = hop_matrix(g, Exec::serial); });
        const double tp = timed([&] { parallel_m = hop_matrix(g, Exec::parallel); });
        const bool ok = serial_m.data() == parallel_m.data();
        all_ok = all_ok && ok;
        report("hop_matrix", ts, tp, ok);
    }

    {
        double serial_v = 0, parallel_v = 0;
        const double ts = timed([&] { serial_v = local_efficiency(g, 0.0, Exec::serial); });
        const double tp = timed([&] { parallel_v = local_efficiency(g, 0.0, Exec::parallel); });
        const bool ok = serial_v == parallel_v;
        all_ok = all_ok && ok;
        report("local_efficiency", ts, tp, ok);
    }

    {
        // Two community structures of the same graph to compare block-wise.
        const Partition a = louvain(g, 1).partition;
        const Partition b = louvain(g, 2).partition;
        std::vector<double> serial_v, parallel_v;
        const double ts = timed([&] { serial_v = JiMatrix(a, b, Exec::serial).values(); });
        const double tp = timed([&] { parallel_v = JiMatrix(a, b, Exec::parallel).values(); });
        const bool ok = serial_v == parallel_v;
        all_ok = all_ok && ok;
        report("ji_matrix", ts, tp, ok);
    }

    {
        const Partition p0 = louvain(g, 1).partition;
        std::vector<WeightedGraph> estimates;
        for (std::uint64_t s = 0; s < 8; ++s)
            estimates.push_back(remove_edges(g, 0.3, s));
        std::vector<RankPoint> serial_v, parallel_v;
        const double ts =
            timed([&] { serial_v = rank_points(g, p0, estimates, 5, 1.0, Exec::serial); });
        const double tp =
            timed([&] { parallel_v = rank_points(g, p0, estimates, 5, 1.0, Exec::parallel); });
        bool ok = serial_v.size() == parallel_v.size();
        for (std::size_t i = 0; ok && i < serial_v.size(); ++i)
            ok = serial_v[i].md == parallel_v[i].md && serial_v[i].jig == parallel_v[i].jig &&
                 serial_v[i].gt_distance == parallel_v[i].gt_distance;
        all_ok = all_ok && ok;
        report("rank_points", ts, tp, ok);
    }

    if (!all_ok) {
        std::fprintf(stderr, "serial and parallel paths disagree\n");
        return 1;
    }
    return 0;
}
