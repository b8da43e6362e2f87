#pragma once

#include "fmosum/distrib.hpp"

#include <span>
#include <string>
#include <vector>

namespace fmosum {

struct DetectConfig {
    int bandwidth = 80;          // G, half-window length
    double alpha = 0.05;         // significance level
    int min_block_len = 15;      // L_m; the AOP parameter is eps = min(0.5, L_m/G)
    double boundary_c = 0.1;     // boundary cutoff parameter c in [0, 0.5)
    bool boundary_correction = true;

    double epsilon() const;      // min(0.5, L_m/G)
    void validate(int n) const;  // n >= 2G, n/G > e, alpha in (0,1), ...
};

// Per-index window statistics for k in [G, n-G] (1-based indexing as in the
// sequence): left/right window Frechet variances, their contaminated
// versions (deviations about the opposite window's mean), and the local
// fourth-/second-moment variance estimate sigma2 = (sigma2_l + sigma2_r)/2.
struct WindowStats {
    int n = 0;
    int bandwidth = 0;
    std::vector<double> v_left, v_right, v_left_c, v_right_c, sigma2;
    double global_variance = 0.0; // Frechet variance of the whole sequence

    // Window means, kept only on request (direct-recomputation checks).
    std::vector<std::vector<double>> left_means, right_means;

    int first_k() const { return bandwidth; }
    int last_k() const { return n - bandwidth; }
    size_t at(int k) const { return static_cast<size_t>(k - bandwidth); }
};

struct ScanValues {
    std::vector<double> values;  // T(k) for k in [G, n-G]
    std::vector<int> degenerate; // ks where the variance floor was substituted
};

// Scan statistic with boundary padding. `values` is 1-based (values[0]
// unused); entries outside [valid_lo, valid_hi] are zero padding and carry
// no evidence.
struct ScanProfile {
    int n = 0;
    int bandwidth = 0;
    double alpha = 0.0;
    double epsilon = 0.0;
    double threshold = 0.0;
    int valid_lo = 0, valid_hi = 0;
    std::vector<double> values;
    std::vector<int> degenerate;
    std::vector<std::string> warnings;
};

struct ChangePointSet {
    struct Block {
        int start = 0, end = 0;  // over-threshold indexing block [s, e]
        int estimate = 0;        // argmax of the statistic within the block
        double peak = 0.0;
    };
    std::vector<int> estimates;  // strictly increasing
    std::vector<Block> blocks;   // one per estimate for detector output;
                                 // empty for merged multiscale results
    int q_hat() const { return static_cast<int>(estimates.size()); }
};

// O(n*M) sliding Frechet statistics using the recursive window-mean updates
// F_bar(k+1) = F_bar(k) + (entering - leaving)/G on both sides.
WindowStats sliding_stats(const DistSeq& seq, int bandwidth, bool keep_means = false);

// T(k) = (2*sigma2/G)^{-1/2} * (|v_r - v_l| + |v_r_c - v_r + v_l_c - v_l|).
// A window variance below 1e-12 * global variance is floored (and the index
// flagged) when the numerator is nonzero; 0/0 yields T = 0.
ScanValues scan_statistic(const WindowStats& stats);

// Asymptotic critical value D_n(G; alpha) from the Gumbel limit:
// (-log log(1/sqrt(1-alpha)) + gamma2(n/G)) / gamma1(n/G) with
// gamma1(x) = sqrt(2 log x),
// gamma2(x) = 2 log x + 0.5 log log x + log(1.5) - 0.5 log(pi).
double critical_value(int n, int bandwidth, double alpha);

// CUSUM-type boundary extension values.
struct BoundaryValues {
    int left_lo = 0, left_hi = -1;   // ks in [ceil(2cG), G-1]; empty if lo > hi
    std::vector<double> left;
    int right_lo = 0, right_hi = -1; // ks in [n-G+1, n-ceil(2cG)]
    std::vector<double> right;
};
BoundaryValues boundary_extension(const DistSeq& seq, int bandwidth, double c);

// Boundary statistic evaluated at a single split; valid for k in [1, G]
// (left) and [n-G, n-1] (right). At k = G (resp. n-G) it coincides with the
// scan statistic.
double left_boundary_value(const DistSeq& seq, int bandwidth, int k);
double right_boundary_value(const DistSeq& seq, int bandwidth, int k);

// Over-threshold block picking: maximal runs of T >= threshold inside the
// profile's valid range, kept when e - s >= eps*G; runs touching the ends of
// the valid range count the missing flank as satisfied. Estimates take the
// smallest argmax index on ties.
ChangePointSet pick_blocks(const ScanProfile& profile, double epsilon);

struct DetectResult {
    ChangePointSet cps;
    ScanProfile profile;
};

// Full single-bandwidth pipeline: sliding_stats -> scan_statistic ->
// boundary_extension (optional) -> critical_value -> pick_blocks.
DetectResult detect(const DistSeq& seq, const DetectConfig& config);

// Standard moving-sum mean-change detector for scalar sequences:
// T(k) = sqrt(G/2) |mean_r - mean_l| / sigma_k with sigma_k^2 the average of
// the two local variances, thresholded and block-picked as above.
ChangePointSet scalar_mosum_detect(std::span<const double> x, int bandwidth,
                                   double alpha, int min_block_len);

} // namespace fmosum
