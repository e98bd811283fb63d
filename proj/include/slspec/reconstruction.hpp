#pragma once

#include <string>
#include <vector>

#include "slspec/grid_function.hpp"
#include "slspec/sequence_space.hpp"
#include "slspec/shooting.hpp"

namespace slspec {

/**
 * Reconstruction of a potential from spectral data.
 *
 * Single-datum surgery uses the closed-form Darboux update
 * sigma -> sigma - 2 (ln G)', where G is assembled from running integrals of
 * shooting solutions; G' is evaluated from the integrands, so no numerical
 * differentiation enters.  Everything is kept in the u-chart
 * (s = sqrt(lambda) u), which stays real for lambda <= 0 and analytic at
 * lambda = 0.
 *
 * Multi-datum reconstruction either chains Darboux steps (one datum at a
 * time, highest index first) or solves the finite-rank integral equation of
 * the transformation kernel: with mismatch kernel F(x,t) = sum w_i g_i(x)
 * g_i(t) the solution k(x,t) = sum c_i(x) g_i(t) satisfies, per generator,
 *
 *     (I + D_w B(x)) c(x) = -D_w g(x),    B_{jl}(x) = int_0^x g_j g_l,
 *
 * and the new potential is sigma_ref + 2 k(x,x), zero-mean gauged.
 */
struct DarbouxStep {
    enum class Kind { Eigenvalue, Norming };
    Kind kind = Kind::Eigenvalue;
    int n = 0;
    double xi = 0.0;
    GridFunction sigma_in, sigma_out;
    GridFunction G;  // the positive denominator on the storage grid
};

struct DegenerateKernel {
    int rank = 0;
    std::vector<GridFunction> gens;   // generators in the u-chart
    std::vector<double> weights;      // F(x,t) = sum w_i g_i(x) g_i(t)
    std::vector<std::string> warnings;
};

/// Move lambda_n to lambda_n + xi keeping every other datum.
/// Requires xi in (lambda_{n-1} - lambda_n, lambda_{n+1} - lambda_n).
DarbouxStep darboux_eigenvalue(const GridFunction& sigma, int n, double xi);

/// Move alpha_n to alpha_n + xi keeping every other datum.  Requires xi > -alpha_n.
DarbouxStep darboux_norming(const GridFunction& sigma, int n, double xi);

/// Chain single-datum moves until F(sigma) matches the target on its first
/// 2N entries.  sigma0 must already match the target beyond the truncation.
/// Steps whose intermediate precondition fails are retried after the rest of
/// the pass; a stuck queue raises an error.
GridFunction reconstruct_sequential(const SpectralData& target, const GridFunction& sigma0);

/// Mismatch kernel between F(sigma_ref) and the target on the first N pairs,
/// built from reference shooting solutions evaluated at the target data.
DegenerateKernel glm_build_kernel(const GridFunction& sigma_ref, const SpectralData& target,
                                  int n_pairs);

/// Diagonal k(x, x) of the transformation kernel.
GridFunction glm_solve(const DegenerateKernel& kernel);

/// sigma_ref + 2 k(x,x), zero-mean gauged.
GridFunction glm_reconstruct(const GridFunction& sigma_ref, const SpectralData& target,
                             int n_pairs);

}  // namespace slspec
