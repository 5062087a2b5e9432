#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dqd/archive.hpp"
#include "dqd/lander.hpp"
#include "dqd/sphere.hpp"

namespace dqd {

// Value-semantic wrapper over the concrete benchmark environments. Copies are
// cheap and independent, which is what the perfect-information metrics rely on
// to re-evaluate elites without touching the search run's eval counter.
class Environment {
public:
    static Environment sphere(const SphereParams& p = {}) { return Environment(SphereEnv(p)); }
    static Environment lander(const LanderParams& p = {}) { return Environment(LanderEnv(p)); }

    Evaluation evaluate(const Genome& g) {
        return std::visit([&](auto& e) { return e.evaluate(g); }, env_);
    }
    Evaluation evaluate_pure(const Genome& g) const {
        return std::visit([&](const auto& e) { return e.evaluate_pure(g); }, env_);
    }
    void shift(std::mt19937_64& rng) {
        std::visit([&](auto& e) { e.shift(rng); }, env_);
    }
    void init_run_profile(std::mt19937_64& rng);

    int epoch() const {
        return std::visit([](const auto& e) { return e.epoch(); }, env_);
    }
    std::int64_t eval_count() const {
        return std::visit([](const auto& e) { return e.eval_count(); }, env_);
    }
    void add_eval_count(std::int64_t n) {
        std::visit([&](auto& e) { e.add_eval_count(n); }, env_);
    }

    bool maximize() const { return std::holds_alternative<LanderEnv>(env_); }
    std::string kind() const { return maximize() ? "lander" : "sphere"; }

    int genome_size() const;
    double genome_bound() const;
    double bootstrap_bound() const;  // box for initial random genomes
    Archive::Params default_archive_params() const;

    // offset used by the QD-score convention: minimization scores sum
    // (offset - objective), maximization sums raw objectives (offset 0)
    double qd_offset() const;

    // current drift parameters, for shift logs
    std::vector<std::pair<std::string, double>> sigma_state() const;

    const SphereEnv* as_sphere() const { return std::get_if<SphereEnv>(&env_); }
    const LanderEnv* as_lander() const { return std::get_if<LanderEnv>(&env_); }
    LanderEnv* as_lander() { return std::get_if<LanderEnv>(&env_); }

private:
    template <class E>
    explicit Environment(E e) : env_(std::move(e)) {}
    std::variant<SphereEnv, LanderEnv> env_;
};

}  // namespace dqd
