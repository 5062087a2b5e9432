#pragma once

#include <cstdint>
#include <random>

#include "dqd/types.hpp"

namespace dqd {

// Shifted sphere benchmark (minimization). The objective center drifts by
// sigma_obj and the two BC sums drift by (sigma_bc1, sigma_bc2); a shift event
// perturbs sigma_obj with its own random sign and both BC offsets with one
// shared sign but independent magnitudes.
struct SphereParams {
    int dims = 100;
    double center = 2.048;
    double clip_bound = 5.12;  // per-gene clamp used by the BC sums
    // Search clamp [-genome_bound, genome_bound]^dims. Wide by default: the
    // drifting optimum random-walks far from the origin over a long run and
    // solutions must be able to follow it, or archive turnover dies out.
    double genome_bound = 512.0;
    double bootstrap_bound = 10.24;  // initial random genomes stay near the origin
    double gamma_obj = 10.0;         // shift magnitude ~ U(0, gamma_obj)
    double gamma_bc = 5.0;           // per-BC shift magnitude ~ U(0, gamma_bc)
};

class SphereEnv {
public:
    explicit SphereEnv(const SphereParams& p = {}) : params_(p) {}

    Evaluation evaluate_pure(const Genome& g) const;
    Evaluation evaluate(const Genome& g) {
        ++eval_count_;
        return evaluate_pure(g);
    }

    // draw order: sign_obj, mag_obj, sign_bc, mag_bc1, mag_bc2
    void shift(std::mt19937_64& rng);

    const SphereParams& params() const { return params_; }
    int epoch() const { return epoch_; }
    std::int64_t eval_count() const { return eval_count_; }
    void add_eval_count(std::int64_t n) { eval_count_ += n; }
    double sigma_obj() const { return sigma_obj_; }
    double sigma_bc1() const { return sigma_bc1_; }
    double sigma_bc2() const { return sigma_bc2_; }

private:
    SphereParams params_;
    double sigma_obj_ = 0.0;
    double sigma_bc1_ = 0.0;
    double sigma_bc2_ = 0.0;
    int epoch_ = 0;
    std::int64_t eval_count_ = 0;
};

}  // namespace dqd
