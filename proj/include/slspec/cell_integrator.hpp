#pragma once

#include <vector>

#include "slspec/grid_function.hpp"

namespace slspec::detail {

/**
 * Transfer-matrix propagation of the first-order system
 *
 *     u' = sigma u + v,     v' = -sigma v - (sigma^2 + lambda) u,
 *
 * where v = u^{[1]} = u' - sigma u is the quasi-derivative.  On each cell the
 * potential is frozen at its midpoint value; with sigma constant the system
 * reduces to u'' = -lambda u in the (u, u') chart, which propagates by an
 * exact rotation, while the midpoint value only enters through the shear
 * u' = v + sigma u at the cell ends.  The scheme is therefore exact for
 * sigma = 0, has a symmetric O(h^2) error expansion in even powers, and its
 * oscillation error does not grow with lambda.  Two refinement levels plus
 * Richardson extrapolation give O(h^4) endpoint values, eigenvalues, and
 * quadratures.
 */
struct CellWeights {
    double c;    // cos(w h), continued through lambda <= 0
    double sn;   // sin(w h)/w
    double icc;  // int_0^h cos^2(w t) dt
    double ics;  // int_0^h cos(w t) sin(w t)/w dt
    double iss;  // int_0^h (sin(w t)/w)^2 dt

    static CellWeights make(double lambda, double h);
};

/// Midpoint samples of the potential at one refinement level.
struct LevelTable {
    int cells = 0;
    double h = 0.0;
    std::vector<double> mid;
};

/// Per-potential tables for the two refinement levels.  Built once per
/// potential and shared across all spectral-parameter evaluations.
class PotentialTables {
public:
    PotentialTables(const GridFunction& sigma, int storage_m, int coarse_cells);

    const LevelTable& coarse() const { return a_; }
    const LevelTable& fine() const { return b_; }
    int storage_m() const { return storage_m_; }
    const GridFunction& sigma() const { return sigma_; }

private:
    GridFunction sigma_;
    int storage_m_;
    LevelTable a_, b_;
};

struct EndState {
    double u_end = 0.0;
    double v_end = 0.0;
    double int_u2 = 0.0;
    int sign_changes = 0;  // interior sign changes of u
};

/// One forward pass from (u, v)(0) = (0, 1).  When `stride` > 0, node values
/// of u, v and the running integral of u^2 are collected every stride-th node.
EndState propagate(const LevelTable& level, double lambda, int stride = 0,
                   std::vector<double>* u_nodes = nullptr,
                   std::vector<double>* v_nodes = nullptr,
                   std::vector<double>* u2_running = nullptr);

/// Backward pass from (u, v)(pi) = (0, 1) down to 0.
EndState propagate_backward(const LevelTable& level, double lambda, int stride = 0,
                            std::vector<double>* u_nodes = nullptr,
                            std::vector<double>* v_nodes = nullptr);

/// Richardson-extrapolated boundary mismatch u(pi, lambda).
double mismatch(const PotentialTables& pt, double lambda);

/// Interior sign changes on the fine level (oscillation count).
int oscillation_count(const PotentialTables& pt, double lambda);

struct SolveResult {
    std::vector<double> u, v;    // at storage nodes, extrapolated
    std::vector<double> q_int;   // running int_0^x u^2
    double int_u2 = 0.0;
    double u_end = 0.0, v_end = 0.0;
};

SolveResult solve_forward(const PotentialTables& pt, double lambda);
SolveResult solve_backward(const PotentialTables& pt, double lambda);

}  // namespace slspec::detail
