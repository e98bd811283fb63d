#pragma once

#include <memory>
#include <vector>

#include "slspec/cell_integrator.hpp"
#include "slspec/grid_function.hpp"
#include "slspec/sequence_space.hpp"

namespace slspec {

inline constexpr int kDefaultStorageM = 512;
inline constexpr int kDefaultCoarseCells = 2048;

/// Solution of the shooting problem with u(0) = 0, u^{[1]}(0) = 1.  Working
/// with u rather than s = sqrt(lambda) u keeps everything analytic in lambda
/// and real for lambda <= 0.
struct ShootingSolution {
    GridFunction u;      // the solution
    GridFunction u1;     // quasi-derivative u' - sigma u
    double lambda = 0.0;
    GridFunction q_int;  // running integral of u^2
};

/// Eigen-data of the Dirichlet operator for one potential: the n smallest
/// eigenvalues, norming constants, eigenfunctions y_k normalized by
/// y^{[1]}(0) = sqrt(lambda_k), and backward solutions z_k normalized by
/// int z^2 = 1/lambda_k.
struct EigenSystem {
    GridFunction sigma;
    std::vector<double> lambdas;
    std::vector<double> alphas;
    std::vector<GridFunction> y, y1;  // eigenfunctions and quasi-derivatives
    std::vector<GridFunction> z, z1;
    std::shared_ptr<const detail::PotentialTables> tables;

    int count() const { return static_cast<int>(lambdas.size()); }
};

ShootingSolution solve_u(const GridFunction& sigma, double lambda);
ShootingSolution solve_u(const detail::PotentialTables& tables, double lambda);

/// Backward solution with z(pi) = 0, rescaled to int z^2 = 1/lambda.
/// Requires lambda > 0; the sign follows z^{[1]}(pi) > 0 before rescaling.
GridFunction solve_z(const GridFunction& sigma, double lambda);
std::pair<GridFunction, GridFunction> solve_z_pair(const detail::PotentialTables& tables,
                                                   double lambda);  // (z, z^{[1]})

/// The n smallest Dirichlet eigenvalues.  Brackets come from oscillation
/// counting (monotone in lambda), roots are polished on u(pi, lambda).
std::vector<double> eigenvalues(const GridFunction& sigma, int n);
std::vector<double> eigenvalues(const detail::PotentialTables& tables, int n);

/// alpha_k = lambda_k int u^2 for lambda_k != 0, int u^2 at lambda_k = 0.
std::vector<double> norming_constants(const GridFunction& sigma,
                                      const std::vector<double>& lambdas);
std::vector<double> norming_constants(const detail::PotentialTables& tables,
                                      const std::vector<double>& lambdas);

/// Regularized data of the first n eigenvalue/norming pairs (K = 2n).
SpectralData spectral_map(const GridFunction& sigma, int n, double theta = 1.0);

EigenSystem eigen_system(const GridFunction& sigma, int n);

std::shared_ptr<const detail::PotentialTables> make_tables(const GridFunction& sigma);

}  // namespace slspec
