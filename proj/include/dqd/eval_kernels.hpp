#pragma once

#include <vector>

#include "dqd/environment.hpp"
#include "dqd/types.hpp"

namespace dqd {

// Batch evaluation kernels. Evaluation is a pure function of (genome, env
// state), so the parallel kernel writes each result into its own slot and is
// bitwise identical to the serial reference for any thread count. The serial
// path is kept as the reference implementation for tests and benchmarks.
// Neither kernel touches the environment's eval counter; callers account for
// the batch explicitly.

std::vector<Evaluation> evaluate_genomes_serial(const Environment& env,
                                                const std::vector<Genome>& genomes);
std::vector<Evaluation> evaluate_genomes_parallel(const Environment& env,
                                                  const std::vector<Genome>& genomes);
std::vector<Evaluation> evaluate_genomes(const Environment& env,
                                         const std::vector<Genome>& genomes, bool parallel);

std::vector<Evaluation> evaluate_refs_serial(const Environment& env,
                                             const std::vector<const Genome*>& genomes);
std::vector<Evaluation> evaluate_refs_parallel(const Environment& env,
                                               const std::vector<const Genome*>& genomes);
std::vector<Evaluation> evaluate_refs(const Environment& env,
                                      const std::vector<const Genome*>& genomes, bool parallel);

}  // namespace dqd
