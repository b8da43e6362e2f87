#pragma once

#include "fmosum/grid.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fmosum {

// One distribution, represented by its quantile values on a shared grid.
// Values are non-decreasing along the grid and finite.
struct QuantileFunction {
    GridPtr grid;
    std::vector<double> values;

    // Validates monotonicity and finiteness; throws std::invalid_argument.
    void validate() const;
};

struct LqdFunction {
    GridPtr grid;
    std::vector<double> values;
};

// Ordered sequence of quantile functions on one grid, with optional integer
// date stamps (strictly increasing when present).
struct DistSeq {
    GridPtr grid;
    std::vector<QuantileFunction> elements;
    std::vector<std::int64_t> time_labels; // empty or one label per element

    int size() const { return static_cast<int>(elements.size()); }
    void validate() const;
};

enum class QuantileStrategy { KSE, SQI };

QuantileStrategy parse_strategy(const std::string& name);

// Estimates a quantile function from raw samples.
//   SQI: empirical sample quantiles (type-7 interpolation between order
//        statistics); grid levels 0 and 1 map to the sample min/max.
//   KSE: inverse of the CDF obtained by integrating a Gaussian-kernel
//        density estimate; bandwidth defaults to Silverman's rule.
// An isotonic projection repairs small numerical monotonicity breaks; a
// violation above 1% of the value range signals corrupt input and throws.
QuantileFunction estimate_quantile(std::span<const double> samples,
                                   const GridPtr& grid,
                                   QuantileStrategy strategy,
                                   std::optional<double> kde_bandwidth = std::nullopt);

// Order-2 Wasserstein distance: sqrt( int_0^1 (q1 - q2)^2 dt ) by trapezoid
// quadrature on the shared grid.
double wasserstein_distance(const QuantileFunction& q1, const QuantileFunction& q2);

// Pointwise mean of the window's quantile values (the empirical Frechet mean
// in Wasserstein space; convex combinations preserve monotonicity).
QuantileFunction frechet_mean(std::span<const QuantileFunction> window);

// Mean squared Wasserstein distance of the window elements to `center`.
double frechet_variance(std::span<const QuantileFunction> window, const QuantileFunction& center);

// Log quantile density: psi = log dq/dt, numerical derivative on the grid
// (second-order central differences inside, one-sided at the ends).
// Requires q strictly increasing.
LqdFunction lqd_transform(const QuantileFunction& q);

// Inverse map: F^{-1}(t) = theta^{-1} * int_0^t exp(psi), theta = int_0^1 exp(psi),
// so the output is a quantile function on [0,1] with F^{-1}(1) = 1.
QuantileFunction inverse_lqd(const LqdFunction& psi);

// Isotonic (pool-adjacent-violators) projection, in place.
void isotonic_project(std::vector<double>& v);

} // namespace fmosum
