#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dqd {

// Deterministic named sub-stream of a master seed. Keeping each consumer of
// randomness (env shifts, each emitter, detection, bootstrap...) on its own
// stream means toggling one feature never perturbs another's draws.
std::mt19937_64 substream(std::uint64_t master_seed, std::string_view name);

// +1 or -1 with equal probability (one uniform draw)
int rademacher(std::mt19937_64& rng);

// Beta(alpha, beta) variate via two gamma draws
double beta_sample(double alpha, double beta, std::mt19937_64& rng);

}  // namespace dqd
