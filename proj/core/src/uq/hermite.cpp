#include <cmath>

#include "polyflam/common/error.hpp"
#include "polyflam/uq/quadrature.hpp"

namespace polyflam::uq {

namespace {

// Physicists' Gauss-Hermite by Newton iteration on the orthonormal
// recurrence, long double throughout for headroom at high degree. Roots are
// computed for the upper half and mirrored.
void gauss_hermite_physicists(int n, std::vector<long double>& x, std::vector<long double>& w) {
    constexpr long double eps = 1e-18L;
    constexpr int max_iter = 200;
    const long double pim4 = 0.7511255444649424828587030047762276930524L;  // pi^(-1/4)

    x.assign(static_cast<std::size_t>(n), 0.0L);
    w.assign(static_cast<std::size_t>(n), 0.0L);
    const int m = (n + 1) / 2;
    long double z = 0.0L;
    for (int i = 0; i < m; ++i) {
        // Stroud & Secrest initial guesses, refined by Newton.
        if (i == 0) {
            z = std::sqrt(static_cast<long double>(2 * n + 1)) -
                1.85575L * std::pow(static_cast<long double>(2 * n + 1), -0.16667L);
        } else if (i == 1) {
            z -= 1.14L * std::pow(static_cast<long double>(n), 0.426L) / z;
        } else if (i == 2) {
            z = 1.86L * z - 0.86L * x[0];
        } else if (i == 3) {
            z = 1.91L * z - 0.91L * x[1];
        } else {
            z = 2.0L * z - x[static_cast<std::size_t>(i - 2)];
        }
        long double pp = 0.0L;
        for (int it = 0; it < max_iter; ++it) {
            long double p1 = pim4;
            long double p2 = 0.0L;
            for (int j = 0; j < n; ++j) {
                const long double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0L / static_cast<long double>(j + 1)) * p2 -
                     std::sqrt(static_cast<long double>(j) / static_cast<long double>(j + 1)) * p3;
            }
            pp = std::sqrt(2.0L * static_cast<long double>(n)) * p2;
            const long double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) break;
        }
        x[static_cast<std::size_t>(i)] = z;
        x[static_cast<std::size_t>(n - 1 - i)] = -z;
        w[static_cast<std::size_t>(i)] = 2.0L / (pp * pp);
        w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
    if (n % 2 == 1) x[static_cast<std::size_t>(m - 1)] = 0.0L;  // exact center
}

}  // namespace

Rule1D gauss_hermite(int n) {
    if (n < 1 || n > 50) throw DomainError("gauss_hermite order must be in [1, 50]");

    if (n == 1) {
        return Rule1D{{0.0}, {1.0}};
    }

    std::vector<long double> x, w;
    gauss_hermite_physicists(n, x, w);

    // Physicists' (weight e^{-t^2}) -> probabilists' (standard normal):
    // xi = sqrt(2)*t, weights normalized by sqrt(pi).
    const long double sqrt2 = std::sqrt(2.0L);
    long double wsum = 0.0L;
    for (const auto wi : w) wsum += wi;

    Rule1D rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Roots came out descending; store ascending.
        const auto src = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(x[src] * sqrt2);
        rule.weights[static_cast<std::size_t>(i)] = static_cast<double>(w[src] / wsum);
    }
    return rule;
}

RandomInput lognormal_from_moments(const std::string& name, double mean, double stddev) {
    if (!(mean > 0.0)) throw DomainError("lognormal mean must be positive");
    if (!(stddev >= 0.0)) throw DomainError("lognormal stddev must be nonnegative");
    const double ratio = stddev / mean;
    const double var_ln = std::log(1.0 + ratio * ratio);
    RandomInput input;
    input.name = name;
    input.kind = RandomInput::Kind::LogNormal;
    input.scale = std::sqrt(var_ln);
    input.location = std::log(mean) - 0.5 * var_ln;
    return input;
}

}  // namespace polyflam::uq
