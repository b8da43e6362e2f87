#include "fmosum/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fmosum {

ProbGrid::ProbGrid(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 3) {
        throw std::invalid_argument("ProbGrid: need at least 3 levels");
    }
    for (size_t i = 0; i < levels_.size(); ++i) {
        double t = levels_[i];
        if (!std::isfinite(t) || t < 0.0 || t > 1.0) {
            throw std::invalid_argument("ProbGrid: levels must be finite and in [0,1]");
        }
        if (i > 0 && !(levels_[i - 1] < t)) {
            throw std::invalid_argument("ProbGrid: levels must be strictly increasing");
        }
    }
    const size_t m = levels_.size();
    weights_.assign(m, 0.0);
    for (size_t i = 0; i + 1 < m; ++i) {
        double h = 0.5 * (levels_[i + 1] - levels_[i]);
        weights_[i] += h;
        weights_[i + 1] += h;
    }
}

std::shared_ptr<const ProbGrid> ProbGrid::uniform(int m) {
    if (m < 3) throw std::invalid_argument("ProbGrid::uniform: m >= 3 required");
    std::vector<double> levels(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        levels[static_cast<size_t>(i)] = static_cast<double>(i) / (m - 1);
    }
    levels.front() = 0.0;
    levels.back() = 1.0;
    return std::make_shared<const ProbGrid>(std::move(levels));
}

std::shared_ptr<const ProbGrid> ProbGrid::make(std::vector<double> levels) {
    return std::make_shared<const ProbGrid>(std::move(levels));
}

double ProbGrid::integrate(std::span<const double> f) const {
    double s = 0.0;
    for (size_t i = 0; i < weights_.size(); ++i) s += weights_[i] * f[i];
    return s;
}

double ProbGrid::integrate_product(std::span<const double> f, std::span<const double> g) const {
    double s = 0.0;
    for (size_t i = 0; i < weights_.size(); ++i) s += weights_[i] * f[i] * g[i];
    return s;
}

double ProbGrid::integrate_sqdiff(std::span<const double> f, std::span<const double> g) const {
    double s = 0.0;
    for (size_t i = 0; i < weights_.size(); ++i) {
        double d = f[i] - g[i];
        s += weights_[i] * d * d;
    }
    return s;
}

bool ProbGrid::same_as(const ProbGrid& other) const {
    if (this == &other) return true;
    return levels_ == other.levels_;
}

void require_same_grid(const GridPtr& a, const GridPtr& b, const char* where) {
    if (a == b) return;
    if (!a || !b || !a->same_as(*b)) {
        throw std::invalid_argument(std::string(where) + ": grid mismatch");
    }
}

} // namespace fmosum
