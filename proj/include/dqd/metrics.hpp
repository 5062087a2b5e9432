#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dqd/archive.hpp"
#include "dqd/environment.hpp"

namespace dqd {

// Perfect-information oracle: what the archive would look like if every live
// elite were re-measured against the current environment. Built on a forked
// env copy so the search run's evaluation counter is untouched.
struct IdealEntry {
    std::int64_t id = -1;
    Evaluation eval;
};

struct IdealArchive {
    int rows = 0, cols = 0;
    std::vector<std::optional<IdealEntry>> grid;
    int occupancy = 0;
    std::int64_t evals = 0;  // oracle evaluations spent building the snapshot

    const std::optional<IdealEntry>& at(int r, int c) const {
        return grid[static_cast<size_t>(r) * cols + c];
    }
    bool contains(std::int64_t id) const;
};

IdealArchive ideal_archive(const Archive& archive, const Environment& env, bool parallel_eval);

// fraction of live elites that keep a cell in the ideal archive; empty -> 1.0
double survival_rate(const Archive& archive, const IdealArchive& ideal);

// MSEs between stored and refreshed values over surviving elites, plus the
// squared gap between live and ideal QD scores. Absent when nothing survived.
struct MseRow {
    bool has = false;
    double obj = 0.0, bc1 = 0.0, bc2 = 0.0, qd = 0.0;
};

MseRow mse_metrics(const Archive& archive, const IdealArchive& ideal, const Environment& env);

// QD score under the sign convention: minimization sums (offset - objective),
// maximization sums raw objectives
double qd_score(const Archive& archive, const Environment& env);
double qd_score(const IdealArchive& ideal, const Environment& env);

// one exported metrics row
struct IterationRow {
    int iteration = 0;
    int epoch = 0;
    int occupancy = 0;
    double survival = 1.0;
    MseRow mse;
    std::int64_t evals_search = 0;  // this iteration's search evaluations
    std::int64_t evals_oracle = 0;  // this iteration's oracle evaluations
};

// Mean Evaluation Cost over the intervals between consecutive known shifts
// (epoch groups 1, 2, ...; the warmup before the first shift is excluded).
// An interval succeeds when survival reaches the threshold at any of its
// iterations; a successful interval costs all search evaluations spent in it.
struct MecResult {
    std::optional<double> mec;
    double success_ratio = 0.0;
    int intervals = 0;
    int successes = 0;
};

MecResult mean_evaluation_cost(const std::vector<IterationRow>& rows, double threshold);

}  // namespace dqd
