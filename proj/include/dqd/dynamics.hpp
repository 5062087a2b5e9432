#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "dqd/archive.hpp"
#include "dqd/environment.hpp"

namespace dqd {

enum class DetectionKind { None, Oldest, Replacees };
enum class ReevalKind { None, Replacees, All };

// Per-iteration bookkeeping enforcing the single-re-evaluation rule: an elite
// re-evaluated by detection is never re-evaluated again by the same
// iteration's re-evaluation pass (the stored eval is already current).
struct IterationTracker {
    std::unordered_set<std::int64_t> refreshed;
    std::int64_t evals = 0;

    bool is_refreshed(std::int64_t id) const { return refreshed.count(id) > 0; }
};

struct CascadeReport {
    int reevaluated = 0;
    int moved = 0;
    int discarded = 0;
};

struct DetectReport {
    bool shifted = false;
    int probes = 0;
    CascadeReport cascade;  // relocations of probes whose BCs changed cells
};

// age-weighted probe sampling without replacement: weight ~ exp(lambda * age)
std::vector<Cell> sample_detectors_oldest(const Archive& archive, int m, double lambda_age,
                                          std::mt19937_64& rng);

// distinct occupied cells the offspring batch would land in
std::vector<Cell> replacee_cells(const Archive& archive,
                                 const std::vector<Evaluation>& offspring_evals);

// Re-evaluate each probe and compare objective and BCs exactly (no margin);
// any difference flags a shift. Probes are refreshed in place regardless of
// the outcome, and those whose new BCs belong to another cell are relocated
// through the cascade resolver.
DetectReport detect_shift(Archive& archive, Environment& env, const std::vector<Cell>& probes,
                          IterationTracker& tracker, bool parallel_eval);

// Work through seed elites: refresh any not yet re-evaluated this iteration,
// then relocate by the fresh BCs. A conflict with a not-yet-refreshed
// occupant re-evaluates that occupant first (it joins the queue); a conflict
// between two refreshed elites is settled by objective, loser discarded.
CascadeReport reevaluate_replacees_cascade(Archive& archive, Environment& env,
                                           const std::vector<std::int64_t>& seed_ids,
                                           IterationTracker& tracker);

// Full rebuild: refresh every elite (reusing evals already taken this
// iteration), re-bin everything, conflicts keep the better fresh objective.
// Returns the number of evaluations spent.
int reevaluate_all(Archive& archive, Environment& env, IterationTracker& tracker,
                   bool parallel_eval);

}  // namespace dqd
