#pragma once

#include <span>
#include <vector>

namespace crossmodal {

/// 1-based fractional ranks; ties receive the average of their positions.
std::vector<double> fractional_ranks(std::span<const double> xs);

struct SpearmanResult {
    double rho = 0.0;
    double p_one_tailed = 1.0;  // positive tail
    int n = 0;
    bool defined = false;  // false when either input is constant
};

/// Spearman rank correlation with average ranks for ties. The one-tailed
/// (positive) p-value uses the Student-t approximation
/// t = rho * sqrt((n-2) / (1 - rho^2)) with n-2 degrees of freedom.
/// Requires n >= 3; a constant input yields a flagged (defined == false)
/// result instead of an error.
SpearmanResult spearman_one_tailed(std::span<const double> xs, std::span<const double> ys);

/// Upper-tail probability of the Student-t distribution.
double student_t_sf(double t, double dof);

/// Exact one-tailed p by enumerating all permutations of ys. Only
/// practical for n <= 10; used to validate the t approximation.
double spearman_exact_one_tailed_p(std::span<const double> xs, std::span<const double> ys);

}  // namespace crossmodal
