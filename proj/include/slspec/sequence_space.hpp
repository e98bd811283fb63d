#pragma once

#include <stdexcept>
#include <vector>

namespace slspec {

/**
 * Regularized spectral data: the interleaved real sequence
 *
 *     s_{2k-1} = alpha_k - pi/2,      s_{2k} = sqrt(lambda_k) - k,
 *
 * truncated at even length K, together with the smoothness tag theta used by
 * the weighted-norm machinery.  Entries are stored 0-based: s[0] = s_1.
 */
struct SpectralData {
    double theta = 1.0;
    int K = 0;
    std::vector<double> s;

    SpectralData() = default;
    SpectralData(double theta_, std::vector<double> entries);

    int pairs() const { return K / 2; }
    double alpha(int k) const { return s[2 * k - 2] + 1.5707963267948966; }   // k in [1, K/2]
    double sqrt_lambda(int k) const { return s[2 * k - 1] + k; }
    double lambda(int k) const { const double r = sqrt_lambda(k); return r * r; }
};

SpectralData operator-(const SpectralData& a, const SpectralData& b);

/// Tail decomposition of a sequence against the slowly-decaying model
/// sequences e_1..e_m plus a weighted-l2 remainder.
struct LdDecomposition {
    int m = 0;                      // number of fitted model sequences
    std::vector<double> c;          // coefficients c_1..c_m
    std::vector<double> remainder;  // s - sum c_p e_p, full length
    double norm = 0.0;              // sqrt(|remainder|_{l2^theta}^2 + sum c_p^2)
};

/// Admissibility box parameters: ball radius r and gap slack h.
struct OmegaBox {
    double r = 1.0;
    double h = 0.3;

    void validate() const {
        if (r <= 0.0 || h <= 0.0 || h >= 1.0)
            throw std::invalid_argument("OmegaBox: need r > 0 and h in (0,1)");
    }
};

struct OmegaReport {
    bool in_omega = false;
    double h_gap = 0.0;     // slack of the gap conditions
    double h_alpha = 0.0;   // slack of the norming-constant floor
    double h_max = 0.0;     // min of the channels, clipped to (0, 1]
};

struct OmegaHatReport {
    bool admissible = false;
    std::string reason;     // empty when admissible
};

/// Model sequence e_p of length K.  Odd p = 2s-1 puts (2j)^{-(2s-1)} at the
/// even positions; even p = 2s puts (2j)^{-2s} at the odd positions.
std::vector<double> e_sequence(int p, int K);

/// Number m of model sequences attached at smoothness theta
/// (m - 1/2 <= theta < m + 1/2).
int ld_model_count(double theta);

/// Weighted least-squares fit of the tail (positions [K/2, K]) against
/// e_1..e_m with weights k^{2 theta}; the remainder carries the l2^theta part.
LdDecomposition ld_decompose(const SpectralData& s, double theta);

double ld_norm(const SpectralData& s, double theta);

/// Membership in the data cone: s_2 >= 0, s_{2k} - s_{2k+2} < 1,
/// s_{2k-1} > -pi/2, with per-channel slack report.
OmegaReport check_omega(const SpectralData& s);

/// Admissibility: sqrt(lambda_k) = s_{2k} + k nonnegative and strictly
/// increasing, alpha_k = s_{2k-1} + pi/2 positive.
OmegaHatReport check_omega_hat(const SpectralData& s);

/// Spectrum shift lambda_k -> lambda_k + c.  The norming constants scale by
/// (lambda_k + c)/lambda_k (by c when lambda_k = 0); both multipliers are
/// pinned by the direct solver on closed-form potentials, see the tests.
SpectralData shift_data(const SpectralData& s, double c);

}  // namespace slspec
