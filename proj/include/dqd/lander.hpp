#pragma once

#include <cstdint>
#include <random>

#include "dqd/types.hpp"

namespace dqd {

// Deterministic planar lunar lander (maximization). A 32-value genome encodes
// an 8x4 linear policy; the action is the argmax of theta^T s over the state
// s = (x, y, vx, vy, angle, angular velocity, left contact, right contact)
// with positions/velocities normalized by the viewport half-width. Wind force
// and turbulence torque follow a fixed per-step magnitude profile scaled by
// the drift parameters sigma_w and sigma_tau; everything else, including the
// start pose chosen once per run, is frozen, so evaluation is a pure function
// of (genome, sigma_w, sigma_tau).
struct LanderParams {
    double dt = 0.02;
    double gravity = 10.0;
    double mass = 5.0;
    double inertia = 3.0;
    double main_thrust = 75.0;
    double side_torque = 3.0;
    double main_fuel_cost = 0.3;
    double side_fuel_cost = 0.03;
    double world_half_width = 10.0;  // x range and state normalization scale
    double start_y = 10.0;
    double pad_half_width = 1.5;
    double land_max_vx = 1.0;
    double land_max_vy = 1.0;
    double land_max_angle = 0.4;
    double leg_dx = 0.25;
    double leg_dy = 0.35;
    double bc_vel_scale = 5.0;  // BC2 = clamp(vy / bc_vel_scale, -3, 0)
    int max_steps = 1000;
    double genome_bound = 1.0;
    double bootstrap_bound = 1.0;
    double sigma_w0 = 10.0;
    double sigma_w_max = 20.0;
    double gamma_w = 0.15;
    double sigma_tau0 = 1.0;
    double sigma_tau_max = 2.0;
    double gamma_tau = 0.1;
};

class LanderEnv {
public:
    explicit LanderEnv(const LanderParams& p = {})
        : params_(p), sigma_w_(p.sigma_w0), sigma_tau_(p.sigma_tau0) {}

    // sample the run-constant start pose and wind/torque step offsets
    void init_run_profile(std::mt19937_64& rng);

    Evaluation evaluate_pure(const Genome& g) const;
    Evaluation evaluate(const Genome& g) {
        ++eval_count_;
        return evaluate_pure(g);
    }

    // draw order: sign_w, mag_w, sign_tau, mag_tau (independent signs)
    void shift(std::mt19937_64& rng);

    const LanderParams& params() const { return params_; }
    int epoch() const { return epoch_; }
    std::int64_t eval_count() const { return eval_count_; }
    void add_eval_count(std::int64_t n) { eval_count_ += n; }
    double sigma_w() const { return sigma_w_; }
    double sigma_tau() const { return sigma_tau_; }
    void set_sigmas(double w, double tau) {
        sigma_w_ = w;
        sigma_tau_ = tau;
    }

    static constexpr int genome_size = 32;  // 8 state values x 4 actions

private:
    LanderParams params_;
    double sigma_w_;
    double sigma_tau_;
    // run profile (fixed per run)
    double x0_ = 0.0, vx0_ = 1.0, vy0_ = -0.5, angle0_ = 0.0, omega0_ = 0.0;
    int wind_k0_ = 0, torque_k0_ = 0;
    int epoch_ = 0;
    std::int64_t eval_count_ = 0;
};

}  // namespace dqd
