#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dqd/archive.hpp"
#include "dqd/types.hpp"

namespace dqd {

enum class Selection { Uniform, BetaBiased };

// Thompson-style parent selection: draw x_c ~ Beta(alpha_c, beta_c) for every
// occupied cell (row-major draw order) and take the k largest draws; cells
// repeat cyclically when k exceeds occupancy. Uniform mode samples occupied
// cells with replacement.
std::vector<Cell> me_select_parents(const Archive& archive, int k, Selection sel,
                                    std::mt19937_64& rng);

struct MapElitesParams {
    int batch_size = 10;
    double mutation_sigma = 0.5;
    Selection selection = Selection::BetaBiased;
};

class MapElitesEmitter {
public:
    MapElitesEmitter(const MapElitesParams& p, int genome_size, double genome_bound,
                     double bootstrap_bound, std::uint64_t master_seed, int index);

    // offspring via isotropic Gaussian mutation of selected parents; an empty
    // archive bootstraps with uniform random genomes (from the bootstrap
    // stream) inside the narrower bootstrap box
    std::vector<Genome> ask(const Archive& archive);

    const std::vector<Cell>& last_parent_cells() const { return parent_cells_; }
    int batch_size() const { return params_.batch_size; }

private:
    MapElitesParams params_;
    int genome_size_;
    double bound_;
    double bootstrap_bound_;
    std::mt19937_64 rng_;
    std::mt19937_64 bootstrap_rng_;
    std::vector<Cell> parent_cells_;
};

struct EmitterEvent {
    int emitter = 0;
    std::string kind;    // "restart" | "retention_update"
    std::string detail;
};

}  // namespace dqd
