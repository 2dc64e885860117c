#ifndef COMMRANK_CONFIG_HPP
#define COMMRANK_CONFIG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "commrank/generators.hpp"

namespace commrank {

/// Parameters of the synthetic block-structured ground truth.
struct PlantedConfig {
    std::size_t n = 90;
    std::size_t blocks = 6;
    double p_in = 0.25;
    double p_out = 0.02;

    bool operator==(const PlantedConfig&) const = default;
};

/// Run-wide settings with documented defaults; every stochastic step derives
/// from the single master seed. Round-trips losslessly through JSON.
struct RunConfig {
    std::uint64_t seed = 42;
    double resolution = 1.0;   // modularity/Louvain resolution
    double threshold = 0.0;    // binarization threshold for the measure vector
    int small_world_refs = 20; // reference graphs per sigma estimate
    WeightRule weight_rule = WeightRule::gt_median;
    double ws_p = 0.1;         // rewiring probability of the small-world model

    // Perturbation sweep grids (fractions of the GT edge count).
    std::vector<double> remove_sweep = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::vector<double> add_sweep = {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
    double skeleton_keep = 0.1;
    std::vector<double> skeleton_add_sweep = {0.25, 0.5};
    std::vector<std::pair<double, double>> hybrid_sweep = {{0.25, 0.25}, {0.5, 0.5}};

    PlantedConfig planted;
    std::string out_dir = ".";

    bool operator==(const RunConfig&) const = default;
};

std::string config_to_json(const RunConfig& c);

/// Throws Malformed on syntax errors, unknown keys, or ill-typed values.
RunConfig config_from_json(const std::string& text);

} // namespace commrank

#endif // COMMRANK_CONFIG_HPP
