#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "dqd/archive.hpp"
#include "dqd/cma.hpp"
#include "dqd/dynamics.hpp"
#include "dqd/emitters.hpp"
#include "dqd/environment.hpp"

namespace dqd {

enum class AlgorithmKind { MapElites, CmaMe };

struct ExperimentConfig {
    std::string name = "experiment";

    std::string env_kind = "sphere";  // "sphere" | "lander"
    SphereParams sphere;
    LanderParams lander;
    std::optional<Archive::Params> archive;  // environment default when absent

    AlgorithmKind algorithm = AlgorithmKind::MapElites;
    MapElitesParams map_elites;
    CmaMeParams cma_me;
    int num_emitters = 4;

    DetectionKind detection = DetectionKind::None;
    int num_detectors = 0;  // 0 -> one offspring batch worth of probes
    double lambda_age = 0.1;

    ReevalKind reevaluation = ReevalKind::None;

    int iterations = 2000;
    int shift_period = 10;  // 0 -> static environment
    std::uint64_t seed = 1;
    int num_seeds = 10;
    bool parallel_eval = true;
    bool write_logs = true;

    Environment make_environment() const;
    Archive::Params archive_params() const;
    int offspring_per_iteration() const;
    int detectors_or_default() const;
};

// strict parsing: unknown keys and invalid enum values raise std::runtime_error
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::json config_to_json(const ExperimentConfig& c);

}  // namespace dqd
