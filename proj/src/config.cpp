#include "commrank/config.hpp"

#include <json.hpp>

#include "commrank/error.hpp"

namespace commrank {

namespace {

using Json = nlohmann::ordered_json;

const char* weight_rule_name(WeightRule r) {
    return r == WeightRule::unit ? "unit" : "gt_median";
}

WeightRule weight_rule_from(const std::string& s) {
    if (s == "unit")
        return WeightRule::unit;
    if (s == "gt_median")
        return WeightRule::gt_median;
    fail(Errc::malformed, "unknown weight rule '" + s + "' (expected unit or gt_median)");
}

} // namespace

std::string config_to_json(const RunConfig& c) {
    Json j;
    j["seed"] = c.seed;
    j["resolution"] = c.resolution;
    j["threshold"] = c.threshold;
    j["small_world_refs"] = c.small_world_refs;
    j["weight_rule"] = weight_rule_name(c.weight_rule);
    j["ws_p"] = c.ws_p;
    j["remove_sweep"] = c.remove_sweep;
    j["add_sweep"] = c.add_sweep;
    j["skeleton_keep"] = c.skeleton_keep;
    j["skeleton_add_sweep"] = c.skeleton_add_sweep;
    j["hybrid_sweep"] = Json::array();
    for (const auto& [r, a] : c.hybrid_sweep)
        j["hybrid_sweep"].push_back(Json::array({r, a}));
    j["planted"] = {{"n", c.planted.n},
                    {"blocks", c.planted.blocks},
                    {"p_in", c.planted.p_in},
                    {"p_out", c.planted.p_out}};
    j["out_dir"] = c.out_dir;
    return j.dump(2) + "\n";
}

RunConfig config_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(Errc::malformed, std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail(Errc::malformed, "config must be a JSON object");
    RunConfig c;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "seed")
                c.seed = value.get<std::uint64_t>();
            else if (key == "resolution")
                c.resolution = value.get<double>();
            else if (key == "threshold")
                c.threshold = value.get<double>();
            else if (key == "small_world_refs")
                c.small_world_refs = value.get<int>();
            else if (key == "weight_rule")
                c.weight_rule = weight_rule_from(value.get<std::string>());
            else if (key == "ws_p")
                c.ws_p = value.get<double>();
            else if (key == "remove_sweep")
                c.remove_sweep = value.get<std::vector<double>>();
            else if (key == "add_sweep")
                c.add_sweep = value.get<std::vector<double>>();
            else if (key == "skeleton_keep")
                c.skeleton_keep = value.get<double>();
            else if (key == "skeleton_add_sweep")
                c.skeleton_add_sweep = value.get<std::vector<double>>();
            else if (key == "hybrid_sweep") {
                c.hybrid_sweep.clear();
                for (const auto& pair : value) {
                    if (!pair.is_array() || pair.size() != 2)
                        fail(Errc::malformed, "hybrid_sweep entries must be [remove, add] pairs");
                    c.hybrid_sweep.emplace_back(pair[0].get<double>(), pair[1].get<double>());
                }
            } else if (key == "planted") {
                c.planted.n = value.at("n").get<std::size_t>();
                c.planted.blocks = value.at("blocks").get<std::size_t>();
                c.planted.p_in = value.at("p_in").get<double>();
                c.planted.p_out = value.at("p_out").get<double>();
            } else if (key == "out_dir")
                c.out_dir = value.get<std::string>();
            else
                fail(Errc::malformed, "unknown config key '" + key + "'");
        }
    } catch (const Json::exception& e) {
        fail(Errc::malformed, std::string("ill-typed config value: ") + e.what());
    }
    return c;
}

} // namespace commrank
