#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace slspec {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Parameters of the W_2^theta norm computation on [0, pi].
struct SobolevParams {
    double theta = 1.0;   // smoothness index, >= 0
    int grid_m = 512;     // grid intervals (M); M+1 samples
    int coeff_count = 256;// retained cosine modes, <= grid_m / 2

    void validate() const {
        if (theta < 0.0) throw std::invalid_argument("SobolevParams: theta must be >= 0");
        if (coeff_count > grid_m / 2)
            throw std::invalid_argument("SobolevParams: coeff_count exceeds Nyquist limit grid_m/2");
    }
};

/**
 * A real function on [0, pi], sampled on a uniform grid of m+1 points.
 *
 * Functions that play the role of a potential additionally carry a series
 * representation
 *
 *     f(x) = slope * (x - pi/2) + sum_{j>=1} coeffs[j-1] * cos(j x),
 *
 * which is zero-mean by construction (the constant mode is excluded; a
 * potential is only determined up to an additive constant, and the zero-mean
 * representative is the stored gauge).  The linear ramp is kept as an exact
 * separate term because it is the one slowly-converging direction the cosine
 * series handles poorly, and it is the direction used by the spectrum-shift
 * trick.  Solution-type functions (ODE solutions, eigenfunctions, kernels)
 * hold raw samples only.
 *
 * All operations are pure; instances are immutable after construction.
 */
class GridFunction {
public:
    GridFunction() = default;

    /// Raw samples, no series representation, no gauge fixing.
    static GridFunction from_samples(std::vector<double> samples);

    /// Exact series representation; samples are evaluated from it.
    static GridFunction from_series(int m, double slope, std::vector<double> coeffs);

    /// Discrete cosine analysis of samples: removes the mean, keeps
    /// coeff_count modes, and re-evaluates the samples from the series so the
    /// series is the single source of truth.
    static GridFunction analyze(const std::vector<double>& samples, int coeff_count,
                                double slope = 0.0);

    static GridFunction zero(int m);

    int m() const { return m_; }
    double h() const { return kPi / m_; }
    double x(int i) const { return kPi * i / m_; }
    const std::vector<double>& samples() const { return samples_; }
    double operator[](int i) const { return samples_[i]; }

    bool has_series() const { return has_series_; }
    double slope() const { return slope_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Point evaluation: series evaluation when available (Clenshaw),
    /// otherwise linear interpolation between samples.
    double value_at(double x) const;

    /// Trapezoid mean over [0, pi] (exact for band-limited samples).
    double mean() const;

    /// Zero-mean representative (subtracts the mean; keeps the series gauge).
    GridFunction projected_zero_mean() const;

    GridFunction& operator+=(const GridFunction& g);
    GridFunction& operator-=(const GridFunction& g);
    GridFunction& operator*=(double a);

    friend GridFunction operator+(GridFunction f, const GridFunction& g) { return f += g; }
    friend GridFunction operator-(GridFunction f, const GridFunction& g) { return f -= g; }
    friend GridFunction operator*(double a, GridFunction f) { return f *= a; }

private:
    int m_ = 0;
    std::vector<double> samples_;
    double slope_ = 0.0;
    std::vector<double> coeffs_;
    bool has_series_ = false;

    void check_compatible(const GridFunction& g) const;
};

/// Build a potential from a closed-form descriptor.  Grammar: '+'-separated
/// terms, each an optionally scaled base: "zero", "x", "cos(3t)", "sin(2t)",
/// "steps:[v1,v2,...]", "coeffs:[c1,c2,...]".  Examples: "x", "0.3cos(2t)",
/// "x/4", "0.5cos(2t)+0.1x".  The result is the zero-mean representative with
/// cosine coefficients populated.
GridFunction make_grid_function(const std::string& spec_text, int m = 512);

/// Same, from a sample array (discrete cosine analysis, zero-mean gauge).
GridFunction make_grid_function(const std::vector<double>& samples, int coeff_count = 256);

/// Weighted cosine-coefficient norm (sum_j j^{2 theta} |c_j|^2 * pi/2)^{1/2}
/// over the series representation, the computational W_2^theta/{1} norm.
/// The linear ramp contributes through its own cosine expansion.
double sobolev_norm(const GridFunction& f, const SobolevParams& p);

/// Composite-Simpson quadrature of f*g over [0, pi]; requires a common grid.
double l2_inner(const GridFunction& f, const GridFunction& g);

/// Composite-Simpson integral of f over [0, pi].
double integrate(const GridFunction& f);

/// 4th-order finite-difference derivative; one-sided stencils at endpoints.
GridFunction ddx(const GridFunction& f);

/// Running integral F(x) = int_0^x f dt (cumulative Simpson), F(0) = 0.
GridFunction antiderivative(const GridFunction& f);

/// Cosine coefficients of the linear ramp (x - pi/2): -(4/pi)/j^2 for odd j.
double ramp_coeff(int j);

}  // namespace slspec
