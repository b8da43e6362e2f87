#include "fmosum/distrib.hpp"

#include "fmosum/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fmosum {

void QuantileFunction::validate() const {
    if (!grid) throw std::invalid_argument("QuantileFunction: missing grid");
    if (values.size() != static_cast<size_t>(grid->size())) {
        throw std::invalid_argument("QuantileFunction: length does not match grid");
    }
    for (size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument("QuantileFunction: non-finite value");
        }
        if (i > 0 && values[i] < values[i - 1]) {
            throw std::invalid_argument("QuantileFunction: values must be non-decreasing");
        }
    }
}

void DistSeq::validate() const {
    if (elements.empty()) throw std::invalid_argument("DistSeq: empty sequence");
    if (!grid) throw std::invalid_argument("DistSeq: missing grid");
    for (const auto& q : elements) {
        require_same_grid(grid, q.grid, "DistSeq");
    }
    if (!time_labels.empty()) {
        if (time_labels.size() != elements.size()) {
            throw std::invalid_argument("DistSeq: time label count mismatch");
        }
        for (size_t i = 1; i < time_labels.size(); ++i) {
            if (time_labels[i] <= time_labels[i - 1]) {
                throw std::invalid_argument("DistSeq: time labels must be strictly increasing");
            }
        }
    }
}

QuantileStrategy parse_strategy(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (s == "KSE") return QuantileStrategy::KSE;
    if (s == "SQI") return QuantileStrategy::SQI;
    throw std::invalid_argument("unknown quantile strategy: " + name);
}

void isotonic_project(std::vector<double>& v) {
    // Pool-adjacent-violators, equal weights.
    const size_t n = v.size();
    std::vector<double> level(n), weight(n);
    std::vector<size_t> count(n);
    size_t top = 0;
    for (size_t i = 0; i < n; ++i) {
        level[top] = v[i];
        weight[top] = 1.0;
        count[top] = 1;
        ++top;
        while (top > 1 && level[top - 2] > level[top - 1]) {
            double w = weight[top - 2] + weight[top - 1];
            level[top - 2] = (weight[top - 2] * level[top - 2] + weight[top - 1] * level[top - 1]) / w;
            weight[top - 2] = w;
            count[top - 2] += count[top - 1];
            --top;
        }
    }
    size_t i = 0;
    for (size_t b = 0; b < top; ++b) {
        for (size_t k = 0; k < count[b]; ++k) v[i++] = level[b];
    }
}

namespace {

// Largest downward step relative to the value range; used to decide between
// silent isotonic repair and signalling corrupt input.
void repair_monotone(std::vector<double>& v, const char* where) {
    double max_drop = 0.0;
    double lo = v[0], hi = v[0];
    for (size_t i = 1; i < v.size(); ++i) {
        max_drop = std::max(max_drop, v[i - 1] - v[i]);
        lo = std::min(lo, v[i]);
        hi = std::max(hi, v[i]);
    }
    if (max_drop == 0.0) return;
    double range = hi - lo;
    if (range > 0.0 && max_drop > 0.01 * range) {
        throw std::runtime_error(std::string(where) +
                                 ": monotonicity violation exceeds 1% of value range");
    }
    isotonic_project(v);
}

QuantileFunction sqi_estimate(std::vector<double> sorted, const GridPtr& grid) {
    const size_t m = sorted.size();
    QuantileFunction out;
    out.grid = grid;
    out.values.resize(static_cast<size_t>(grid->size()));
    for (int i = 0; i < grid->size(); ++i) {
        double t = grid->level(i);
        // Type-7 sample quantile: linear interpolation between order statistics.
        double h = t * static_cast<double>(m - 1);
        size_t j = static_cast<size_t>(std::floor(h));
        if (j >= m - 1) {
            out.values[static_cast<size_t>(i)] = sorted[m - 1];
        } else {
            double g = h - static_cast<double>(j);
            out.values[static_cast<size_t>(i)] = sorted[j] + g * (sorted[j + 1] - sorted[j]);
        }
    }
    return out;
}

double silverman_bandwidth(const std::vector<double>& sorted) {
    const size_t m = sorted.size();
    double mean = 0.0;
    for (double x : sorted) mean += x;
    mean /= static_cast<double>(m);
    double ss = 0.0;
    for (double x : sorted) ss += (x - mean) * (x - mean);
    double sd = (m > 1) ? std::sqrt(ss / static_cast<double>(m - 1)) : 0.0;

    auto type7 = [&](double t) {
        double h = t * static_cast<double>(m - 1);
        size_t j = static_cast<size_t>(std::floor(h));
        if (j >= m - 1) return sorted[m - 1];
        double g = h - static_cast<double>(j);
        return sorted[j] + g * (sorted[j + 1] - sorted[j]);
    };
    double iqr = type7(0.75) - type7(0.25);

    double spread;
    if (sd > 0.0 && iqr > 0.0) {
        spread = std::min(sd, iqr / 1.34);
    } else {
        spread = std::max(sd, iqr / 1.34);
    }
    return 0.9 * spread * std::pow(static_cast<double>(m), -0.2);
}

QuantileFunction kse_estimate(std::vector<double> sorted, const GridPtr& grid,
                              std::optional<double> bandwidth) {
    const size_t m = sorted.size();
    bool distinct = false;
    for (size_t i = 1; i < m; ++i) {
        if (sorted[i] != sorted[0]) { distinct = true; break; }
    }
    if (!distinct) {
        throw std::invalid_argument("estimate_quantile: KSE needs at least 2 distinct samples");
    }
    double h = bandwidth.value_or(silverman_bandwidth(sorted));
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("estimate_quantile: nonpositive KDE bandwidth");
    }

    // KDE CDF on a fine support grid, then inverse by interpolation. The
    // Gaussian kernel carries no mass beyond 8h at double precision, so only
    // samples in a sliding window contribute.
    const int k = 4096;
    double xlo = sorted.front() - 4.0 * h;
    double xhi = sorted.back() + 4.0 * h;
    std::vector<double> xs(k), cdf(k);
    for (int i = 0; i < k; ++i) {
        xs[static_cast<size_t>(i)] = xlo + (xhi - xlo) * static_cast<double>(i) / (k - 1);
    }
    for (int i = 0; i < k; ++i) {
        double x = xs[static_cast<size_t>(i)];
        auto lo_it = std::lower_bound(sorted.begin(), sorted.end(), x - 8.0 * h);
        auto hi_it = std::upper_bound(sorted.begin(), sorted.end(), x + 8.0 * h);
        double s = static_cast<double>(lo_it - sorted.begin()); // fully below: Phi ~= 1
        for (auto it = lo_it; it != hi_it; ++it) {
            s += norm_cdf((x - *it) / h);
        }
        cdf[static_cast<size_t>(i)] = s / static_cast<double>(m);
    }

    QuantileFunction out;
    out.grid = grid;
    out.values.resize(static_cast<size_t>(grid->size()));
    size_t j = 0;
    for (int i = 0; i < grid->size(); ++i) {
        double t = grid->level(i);
        if (t <= cdf.front()) {
            out.values[static_cast<size_t>(i)] = xs.front();
            continue;
        }
        if (t >= cdf.back()) {
            out.values[static_cast<size_t>(i)] = xs.back();
            continue;
        }
        while (j + 2 < cdf.size() && cdf[j + 1] < t) ++j;
        double c0 = cdf[j], c1 = cdf[j + 1];
        double w = (c1 > c0) ? (t - c0) / (c1 - c0) : 0.5;
        out.values[static_cast<size_t>(i)] = xs[j] + w * (xs[j + 1] - xs[j]);
    }
    repair_monotone(out.values, "estimate_quantile(KSE)");
    return out;
}

} // namespace

QuantileFunction estimate_quantile(std::span<const double> samples,
                                   const GridPtr& grid,
                                   QuantileStrategy strategy,
                                   std::optional<double> kde_bandwidth) {
    if (samples.empty()) throw std::invalid_argument("estimate_quantile: empty sample set");
    if (!grid) throw std::invalid_argument("estimate_quantile: missing grid");
    std::vector<double> sorted(samples.begin(), samples.end());
    for (double x : sorted) {
        if (!std::isfinite(x)) throw std::invalid_argument("estimate_quantile: non-finite sample");
    }
    std::sort(sorted.begin(), sorted.end());

    if (strategy == QuantileStrategy::SQI) {
        return sqi_estimate(std::move(sorted), grid);
    }
    return kse_estimate(std::move(sorted), grid, kde_bandwidth);
}

double wasserstein_distance(const QuantileFunction& q1, const QuantileFunction& q2) {
    require_same_grid(q1.grid, q2.grid, "wasserstein_distance");
    return std::sqrt(q1.grid->integrate_sqdiff(q1.values, q2.values));
}

QuantileFunction frechet_mean(std::span<const QuantileFunction> window) {
    if (window.empty()) throw std::invalid_argument("frechet_mean: empty window");
    const GridPtr& grid = window.front().grid;
    QuantileFunction out;
    out.grid = grid;
    out.values.assign(static_cast<size_t>(grid->size()), 0.0);
    for (const auto& q : window) {
        require_same_grid(grid, q.grid, "frechet_mean");
        for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += q.values[i];
    }
    double inv = 1.0 / static_cast<double>(window.size());
    for (double& v : out.values) v *= inv;
    return out;
}

double frechet_variance(std::span<const QuantileFunction> window, const QuantileFunction& center) {
    if (window.empty()) throw std::invalid_argument("frechet_variance: empty window");
    double s = 0.0;
    for (const auto& q : window) {
        require_same_grid(center.grid, q.grid, "frechet_variance");
        s += center.grid->integrate_sqdiff(q.values, center.values);
    }
    return s / static_cast<double>(window.size());
}

namespace {

// Derivative of the Lagrange quadratic through (a,fa),(b,fb),(c,fc) at x.
double lagrange3_deriv(double x, double a, double b, double c,
                       double fa, double fb, double fc) {
    return fa * (2.0 * x - b - c) / ((a - b) * (a - c)) +
           fb * (2.0 * x - a - c) / ((b - a) * (b - c)) +
           fc * (2.0 * x - a - b) / ((c - a) * (c - b));
}

} // namespace

LqdFunction lqd_transform(const QuantileFunction& q) {
    const auto& t = q.grid->levels();
    const auto& v = q.values;
    const int m = q.grid->size();
    LqdFunction out;
    out.grid = q.grid;
    out.values.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        double d;
        if (i == 0) {
            d = lagrange3_deriv(t[0], t[0], t[1], t[2], v[0], v[1], v[2]);
        } else if (i == m - 1) {
            size_t s = static_cast<size_t>(m) - 3;
            d = lagrange3_deriv(t[s + 2], t[s], t[s + 1], t[s + 2], v[s], v[s + 1], v[s + 2]);
        } else {
            size_t s = static_cast<size_t>(i);
            d = lagrange3_deriv(t[s], t[s - 1], t[s], t[s + 1], v[s - 1], v[s], v[s + 1]);
        }
        if (!(d > 0.0)) {
            throw std::invalid_argument("lqd_transform: quantile function is not strictly increasing");
        }
        out.values[static_cast<size_t>(i)] = std::log(d);
    }
    return out;
}

QuantileFunction inverse_lqd(const LqdFunction& psi) {
    const auto& t = psi.grid->levels();
    const int m = psi.grid->size();
    for (double v : psi.values) {
        if (!std::isfinite(v)) throw std::invalid_argument("inverse_lqd: non-finite input");
    }
    std::vector<double> density(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        density[static_cast<size_t>(i)] = std::exp(psi.values[static_cast<size_t>(i)]);
    }
    QuantileFunction out;
    out.grid = psi.grid;
    out.values.assign(static_cast<size_t>(m), 0.0);
    for (int i = 1; i < m; ++i) {
        size_t s = static_cast<size_t>(i);
        out.values[s] = out.values[s - 1] +
                        0.5 * (t[s] - t[s - 1]) * (density[s] + density[s - 1]);
    }
    double total = out.values.back();
    if (!(total > 0.0)) throw std::invalid_argument("inverse_lqd: degenerate normalizer");
    for (double& v : out.values) v /= total;
    return out;
}

} // namespace fmosum
