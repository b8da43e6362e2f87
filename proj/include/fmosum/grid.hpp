#pragma once

#include <memory>
#include <span>
#include <vector>

namespace fmosum {

// Shared probability grid t_1 < ... < t_M in [0, 1]. All quantile functions
// in one analysis reference the same grid, and integrals over [t_1, t_M] use
// the cached trapezoid weights.
class ProbGrid {
public:
    explicit ProbGrid(std::vector<double> levels);

    // Equally spaced grid on [0, 1]; the default analysis grid uses m = 201.
    static std::shared_ptr<const ProbGrid> uniform(int m = 201);
    static std::shared_ptr<const ProbGrid> make(std::vector<double> levels);

    int size() const { return static_cast<int>(levels_.size()); }
    const std::vector<double>& levels() const { return levels_; }
    const std::vector<double>& trap_weights() const { return weights_; }
    double level(int i) const { return levels_[static_cast<size_t>(i)]; }

    // Trapezoid integral of f given by its grid values.
    double integrate(std::span<const double> f) const;
    // Trapezoid integral of f*g.
    double integrate_product(std::span<const double> f, std::span<const double> g) const;
    // Trapezoid integral of (f-g)^2.
    double integrate_sqdiff(std::span<const double> f, std::span<const double> g) const;

    bool same_as(const ProbGrid& other) const;

private:
    std::vector<double> levels_;
    std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const ProbGrid>;

// Throws std::invalid_argument unless both functions live on the same grid.
void require_same_grid(const GridPtr& a, const GridPtr& b, const char* where);

} // namespace fmosum
