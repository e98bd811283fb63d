#pragma once

#include <memory>
#include <vector>

#include "slspec/grid_function.hpp"
#include "slspec/sequence_space.hpp"
#include "slspec/shooting.hpp"

namespace slspec {

/**
 * Linearization of the data map around a potential.
 *
 * At sigma = 0 the derivative is the explicit operator T with rows
 *
 *     (T f)_{2k-1} = -int (pi - t) f(t) cos(2kt) dt,
 *     (T f)_{2k}   = -(1/pi) int f(t) sin(2kt) dt,
 *
 * evaluated here in coefficient space (the trig moments of cos(jt) and of the
 * linear ramp have closed forms, so band-limited inputs are handled exactly).
 *
 * At a general potential the derivative rows are the functions phi_k built
 * from the eigen-system, and the biorthogonal family psi_k gives the
 * derivative of the inverse map.  The lambda-derivatives inside phi/psi are
 * taken by central differences with relative step 1e-5, which the Taylor
 * remainder tests validate to O(t^2).
 *
 * Note: the even-index psi carries the prefactor -4 sqrt(lambda)/alpha.  The
 * factor is pinned by biorthogonality against phi (and by the inverse
 * round-trip); see the tests.
 */
struct BasisFamily {
    enum class Kind { Phi, Psi };
    Kind kind = Kind::Phi;
    std::vector<GridFunction> entries;  // 1-based index k maps to entries[k-1]
    std::shared_ptr<const EigenSystem> source;
};

/// T applied to a zero-mean potential; entries s_1..s_K.
std::vector<double> T_apply(const GridFunction& sigma, int K);

/// Inverse of T on a finite sequence: sum_k s_k psi0_k with the sigma = 0
/// biorthogonal family, gauge-projected to zero mean.
GridFunction T_inverse(const SpectralData& s, int m = 512);

/// The sigma = 0 model rows of T: (x-pi)cos(2kx) at odd positions,
/// -(1/pi) sin(2kx) at even ones.
GridFunction T_model_row(int k, int m = 512);

/// The sigma = 0 biorthogonal family, gauge-projected.
GridFunction T_inverse_row(int k, int m = 512);

/// Derivative row phi_k of the forward map at the potential of `es`.
GridFunction phi_basis(const EigenSystem& es, int k);

/// Biorthogonal row psi_k (derivative of the inverse map), gauge-projected.
GridFunction psi_basis(const EigenSystem& es, int k);

BasisFamily phi_family(const EigenSystem& es, int K);
BasisFamily psi_family(const EigenSystem& es, int K);

/// F'(sigma) f: the pairings (phi_k, f), k = 1..K.
std::vector<double> frechet_forward(const GridFunction& sigma, const GridFunction& f, int K);
std::vector<double> frechet_forward(const EigenSystem& es, const GridFunction& f, int K);

/// (F^{-1})'(y) applied to a finite increment: sum ds_k psi_k, projected.
GridFunction frechet_inverse(const EigenSystem& es, const std::vector<double>& ds);

}  // namespace slspec
