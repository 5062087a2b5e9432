#pragma once

#include <cstdint>
#include <vector>

namespace dqd {

using Genome = std::vector<double>;

// one fitness/behavior measurement of a genome against some environment state
struct Evaluation {
    double objective = 0.0;
    double bc1 = 0.0;
    double bc2 = 0.0;
    int epoch = 0;  // environment epoch the measurement was taken in
};

struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
};

struct Elite {
    std::int64_t id = -1;
    Genome genome;
    Evaluation eval;
    int age = 0;  // iterations since last (re-)evaluation
};

enum class InsertKind { FilledEmpty, ReplacedWorse, RejectedWorse };

struct InsertOutcome {
    InsertKind kind = InsertKind::RejectedWorse;
    Cell cell;
    double objective = 0.0;    // candidate's objective
    double improvement = 0.0;  // gain over the replaced occupant, in the better direction
};

}  // namespace dqd
