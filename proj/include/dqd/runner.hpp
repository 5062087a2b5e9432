#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqd/config.hpp"
#include "dqd/metrics.hpp"

namespace dqd {

struct ShiftLogEntry {
    int iteration = 0;
    int epoch = 0;
    std::vector<std::pair<std::string, double>> sigmas;
};

struct DynamicsLogEntry {
    int iteration = 0;
    bool shift_detected = false;
    int probes = 0;
    int reevaluated = 0;  // all re-evaluations this iteration (detection + cascades + rebuilds)
    int moved = 0;
    int discarded = 0;
};

struct EmitterLogEntry {
    int iteration = 0;
    EmitterEvent event;
};

struct RunResult {
    std::uint64_t seed = 0;
    std::vector<IterationRow> rows;
    std::vector<ShiftLogEntry> shift_log;
    std::vector<DynamicsLogEntry> dynamics_log;
    std::vector<EmitterLogEntry> emitter_log;
    std::optional<Archive> final_archive;
    std::optional<Environment> final_env;

    double mean_survival() const;
    std::optional<double> mean_mse_obj() const;
    std::optional<double> mean_mse_bc1() const;
    std::optional<double> mean_mse_bc2() const;
    std::optional<double> mean_mse_qd() const;
    MecResult mec(double threshold) const;
    std::int64_t total_search() const;
    std::int64_t total_oracle() const;
};

// One seeded run of the full iteration loop: generate and evaluate offspring,
// sample detectors and test for a shift, re-evaluate per strategy, insert
// offspring, update emitters, snapshot metrics, age the archive, advance the
// shift schedule. `with_metrics=false` skips the oracle snapshot (used to
// verify the oracle never perturbs the search trajectory).
RunResult run_experiment(const ExperimentConfig& config, std::uint64_t seed,
                         bool with_metrics = true);

}  // namespace dqd
