#include "fmosum/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fmosum {

double norm_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double norm_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
    const int max_iter = 300;
    const double eps = 1e-15;
    const double fpmin = std::numeric_limits<double>::min() / eps;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= max_iter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

} // namespace

double inc_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("inc_beta: parameters must be positive");
    }
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;

    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double beta_pdf(double x, double a, double b) {
    if (x < 0.0 || x > 1.0) return 0.0;
    if (x == 0.0) return (a < 1.0) ? std::numeric_limits<double>::infinity() : (a == 1.0 ? b : 0.0);
    if (x == 1.0) return (b < 1.0) ? std::numeric_limits<double>::infinity() : (b == 1.0 ? a : 0.0);
    double ln = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x);
    return std::exp(ln);
}

double beta_quantile(double p, double a, double b) {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (inc_beta(a, b, mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-14) break;
    }
    return 0.5 * (lo + hi);
}

double truncated_normal_quantile(double p, double mean, double sd, double lo, double hi) {
    if (!(sd > 0.0)) throw std::invalid_argument("truncated_normal_quantile: sd must be positive");
    if (!(lo < hi)) throw std::invalid_argument("truncated_normal_quantile: empty support");
    double flo = norm_cdf((lo - mean) / sd);
    double fhi = norm_cdf((hi - mean) / sd);
    double mass = fhi - flo;
    if (!(mass > 0.0)) throw std::invalid_argument("truncated_normal_quantile: no mass on support");
    if (p <= 0.0) return lo;
    if (p >= 1.0) return hi;

    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (a + b);
        double f = (norm_cdf((mid - mean) / sd) - flo) / mass;
        if (f < p) {
            a = mid;
        } else {
            b = mid;
        }
        if (b - a < 1e-10) break;
    }
    return 0.5 * (a + b);
}

} // namespace fmosum
