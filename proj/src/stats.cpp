#include "landscape/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace landscape {

double poisson_pmf(int j, double lambda) {
    if (j < 0)
        return 0.0;
    if (lambda == 0.0)
        return j == 0 ? 1.0 : 0.0;
    return std::exp(-lambda + j * std::log(lambda) - std::lgamma(j + 1.0));
}

namespace {

// series expansion of P(a,x), converges fast for x < a + 1
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), for x >= a + 1
double gamma_q_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16)
            break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw std::invalid_argument("regularized_gamma_q requires a > 0, x >= 0");
    if (x == 0.0)
        return 1.0;
    if (x < a + 1.0)
        return 1.0 - gamma_p_series(a, x);
    return gamma_q_fraction(a, x);
}

double chi_squared_sf(double x, int dof) {
    if (dof < 1)
        throw std::invalid_argument("chi_squared_sf requires dof >= 1");
    if (x <= 0.0)
        return 1.0;
    return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

MeanEstimate mean_estimate(const std::vector<double>& samples) {
    MeanEstimate e;
    e.count = static_cast<std::int64_t>(samples.size());
    if (e.count == 0)
        return e;
    double sum = 0;
    for (double s : samples)
        sum += s;
    e.mean = sum / static_cast<double>(e.count);
    if (e.count > 1) {
        double ss = 0;
        for (double s : samples) {
            const double d = s - e.mean;
            ss += d * d;
        }
        const double variance = ss / static_cast<double>(e.count - 1);
        e.std_error = std::sqrt(variance / static_cast<double>(e.count));
    }
    e.ci95_lo = e.mean - 1.959963984540054 * e.std_error;
    e.ci95_hi = e.mean + 1.959963984540054 * e.std_error;
    return e;
}

} // namespace landscape
