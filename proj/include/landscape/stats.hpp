#pragma once

#include <cstdint>
#include <vector>

namespace landscape {

/// Poisson pmf e^-lambda lambda^j / j!, evaluated in log space.
double poisson_pmf(int j, double lambda);

/// Upper regularized incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

/// Survival function of the chi-squared distribution.
double chi_squared_sf(double x, int dof);

struct MeanEstimate {
    std::int64_t count = 0;
    double mean = 0;
    double std_error = 0;
    double ci95_lo = 0;
    double ci95_hi = 0;
};

MeanEstimate mean_estimate(const std::vector<double>& samples);

} // namespace landscape
