#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dqd/types.hpp"

namespace dqd {

// MAP-Elites grid: one elite per cell of a uniformly binned 2-D behavior space.
// Each cell also carries Beta(alpha, beta) selection counters and a freshness
// flag marking elites (re-)evaluated in the current iteration.
class Archive {
public:
    struct Params {
        int rows = 100;
        int cols = 100;
        double bc1_lo = -256.0, bc1_hi = 256.0;
        double bc2_lo = -256.0, bc2_hi = 256.0;
        bool maximize = false;
    };

    struct Slot {
        bool occupied = false;
        Elite elite;
        double alpha = 1.0;
        double beta = 1.0;
        bool fresh = false;
    };

    explicit Archive(const Params& p);

    const Params& params() const { return params_; }
    int rows() const { return params_.rows; }
    int cols() const { return params_.cols; }
    int occupancy() const { return occupancy_; }

    // strict "a beats b" under this archive's objective direction
    bool better(double a, double b) const { return params_.maximize ? a > b : a < b; }

    // uniform binning with clamping at the edges; throws on non-finite BCs
    Cell cell_index(double bc1, double bc2) const;

    InsertOutcome try_insert(const Genome& g, const Evaluation& ev);

    enum class RelocateKind { Stayed, Moved, Conflict };
    struct RelocateResult {
        RelocateKind kind = RelocateKind::Stayed;
        Cell target;
    };

    // refresh the occupant's eval in place (age 0, fresh) and report where its
    // new BCs put it; on Conflict the elite stays in its old cell and the
    // caller resolves the contest
    RelocateResult relocate(const Cell& c, const Evaluation& ev);

    // refresh only, no movement decision
    void refresh_eval(const Cell& c, const Evaluation& ev);

    // move occupant of `from` into empty cell `to`
    void move(const Cell& from, const Cell& to);
    void discard(const Cell& c);

    // wipe all occupants and reset every cell's Beta counters to (1,1)
    void clear();
    // low-level placement used when rebuilding; resets the cell's Beta counters
    void place(const Cell& c, Elite e, bool fresh);

    // alpha += 1 everywhere; beta += 1 in cells that held no parent
    void update_beta_params(const std::vector<Cell>& parent_cells);

    // low-level counter override (floors at 1), for tools and tests
    void set_counters(const Cell& c, double alpha, double beta);

    // end of iteration: fresh elites keep age 0 (flag cleared), others age by 1
    void tick_ages();

    bool occupied(const Cell& c) const { return slot(c).occupied; }
    const Slot& slot(const Cell& c) const { return grid_[idx(c)]; }
    const Elite& at(const Cell& c) const { return grid_[idx(c)].elite; }

    bool contains(std::int64_t id) const { return cell_by_id_.count(id) > 0; }
    Cell cell_of(std::int64_t id) const { return cell_by_id_.at(id); }

    std::vector<Cell> occupied_cells() const;  // row-major

    void mark_fresh(const Cell& c);

private:
    int idx(const Cell& c) const { return c.row * params_.cols + c.col; }
    Slot& slot_mut(const Cell& c) { return grid_[idx(c)]; }

    Params params_;
    std::vector<Slot> grid_;
    std::unordered_map<std::int64_t, Cell> cell_by_id_;
    int occupancy_ = 0;
    std::int64_t next_id_ = 0;
};

}  // namespace dqd
