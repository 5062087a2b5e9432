#pragma once

#include <vector>

namespace dqd {

struct MeanCi {
    double mean = 0.0;
    double half_width = 0.0;  // 95% Student-t half width
    int n = 0;
};

MeanCi mean_ci95(const std::vector<double>& xs);

struct WelchResult {
    double t = 0.0;
    double dof = 0.0;
    double p = 1.0;  // two-sided
};

// Welch's unequal-variance t-test with Welch-Satterthwaite degrees of freedom.
// Two zero-variance samples compare degenerately: equal means give t=0, p=1;
// different means give p=0.
WelchResult welch_t_test(const std::vector<double>& a, const std::vector<double>& b);

double bonferroni(double p, int comparisons);

}  // namespace dqd
