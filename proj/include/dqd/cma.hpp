#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "dqd/archive.hpp"
#include "dqd/emitters.hpp"
#include "dqd/types.hpp"

namespace dqd {

struct CmaWeights {
    Eigen::VectorXd w;  // positive recombination weights, best candidate first
    double mu_eff = 1.0;
};

// standard log-rank weights over mu selected candidates, normalized to sum 1
CmaWeights standard_weights(int mu);

// Plain CMA-ES core. Callers hand `update` the selected candidates already
// sorted best-first; the weights/mu_eff are passed in explicitly so that a
// supplemental update can run with scaled values without disturbing the
// emitter's own configuration.
class CmaEs {
public:
    CmaEs(int dim, double sigma0);

    void reinit(const Eigen::VectorXd& mean, double sigma);

    std::vector<Eigen::VectorXd> ask(int lambda, std::mt19937_64& rng);

    // one mean/covariance (and optionally step-size) update
    void update(const std::vector<Eigen::VectorXd>& selected, const CmaWeights& wts,
                bool update_sigma);

    bool degenerate() const { return degenerate_; }
    const Eigen::VectorXd& mean() const { return m_; }
    double sigma() const { return sigma_; }
    const Eigen::MatrixXd& cov() const { return C_; }
    const Eigen::VectorXd& path_c() const { return p_c_; }
    const Eigen::VectorXd& path_sigma() const { return p_sigma_; }

private:
    void refresh_eigen();

    int n_;
    double sigma0_;
    Eigen::VectorXd m_;
    double sigma_;
    Eigen::MatrixXd C_;
    Eigen::VectorXd p_sigma_, p_c_;
    Eigen::MatrixXd B_;
    Eigen::VectorXd D_;
    bool eigen_stale_ = true;
    bool degenerate_ = false;
    long long sigma_gens_ = 0;  // step-size updates seen, for the h_sigma normalizer
    double chi_n_;
};

// Deterministic total order over a candidate batch: archive fills first (best
// objective leading), then replacements by improvement, then rejections; all
// ties fall through to objective/BC/genome comparisons so any permutation of
// the batch ranks identically.
std::vector<int> improvement_ranking(const std::vector<Genome>& genomes,
                                     const std::vector<Evaluation>& evals,
                                     const std::vector<InsertOutcome>& outcomes, bool maximize);

struct CmaMeParams {
    int batch_size = 20;
    double sigma0 = 0.5;
    double gamma = 0.5;        // retention update scaling
    int stagnation_limit = 5;  // zero-improvement generations before restart
};

class CmaMeEmitter {
public:
    CmaMeEmitter(const CmaMeParams& p, int genome_size, double genome_bound,
                 double bootstrap_bound, std::uint64_t master_seed, int index);

    std::vector<Genome> ask(const Archive& archive);

    // archive outcomes of this emitter's batch, in ask order
    void tell(const Archive& archive, const std::vector<Genome>& genomes,
              const std::vector<Evaluation>& evals, const std::vector<InsertOutcome>& outcomes);

    // supplemental mean/covariance update from elites untouched by this
    // iteration's re-evaluations; weights and mu_eff are scaled by gamma
    void retention_update(const Archive& archive,
                          const std::unordered_set<std::int64_t>& refreshed_ids);

    std::vector<EmitterEvent> take_events();

    int batch_size() const { return params_.batch_size; }
    const CmaEs& core() const { return cma_; }
    int stagnation() const { return stagnation_; }

private:
    void restart(const Archive& archive);

    CmaMeParams params_;
    int n_;
    double bound_;
    double bootstrap_bound_;
    int index_;
    std::mt19937_64 rng_;
    CmaEs cma_;
    CmaWeights wts_;
    int stagnation_ = 0;
    bool initialized_ = false;
    std::vector<EmitterEvent> events_;
};

}  // namespace dqd
