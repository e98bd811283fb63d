#include "slspec/cell_integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace slspec::detail {

CellWeights CellWeights::make(double lambda, double h) {
    CellWeights w{};
    const double z = lambda * h * h;
    if (z > 1e-6) {
        const double wh = std::sqrt(z);
        const double om = wh / h;
        w.c = std::cos(wh);
        w.sn = std::sin(wh) / om;
    } else if (z < -1e-6) {
        const double wh = std::sqrt(-z);
        const double om = wh / h;
        w.c = std::cosh(wh);
        w.sn = std::sinh(wh) / om;
    } else {
        // series in z = lambda h^2; |z| <= 1e-6 keeps the truncation below 1e-28
        w.c = 1.0 - z / 2 + z * z / 24 - z * z * z / 720;
        w.sn = h * (1.0 - z / 6 + z * z / 120 - z * z * z / 5040);
    }
    w.icc = 0.5 * (h + w.sn * w.c);
    w.ics = 0.5 * w.sn * w.sn;
    if (std::abs(z) > 1e-6) {
        w.iss = (h - w.sn * w.c) / (2.0 * lambda);
    } else {
        w.iss = h * h * h * (1.0 / 3 - z / 15 + 2 * z * z / 315);
    }
    return w;
}

namespace {

LevelTable build_level(const GridFunction& sigma, int cells) {
    LevelTable t;
    t.cells = cells;
    t.h = kPi / cells;
    t.mid.resize(cells);
    for (int i = 0; i < cells; ++i) t.mid[i] = sigma.value_at((i + 0.5) * t.h);
    return t;
}

}  // namespace

PotentialTables::PotentialTables(const GridFunction& sigma, int storage_m, int coarse_cells)
    : sigma_(sigma), storage_m_(storage_m) {
    if (!sigma.has_series())
        throw std::invalid_argument("PotentialTables: potential needs a series representation");
    if (coarse_cells % storage_m != 0)
        throw std::invalid_argument("PotentialTables: cells must be a multiple of the storage grid");
    a_ = build_level(sigma, coarse_cells);
    b_ = build_level(sigma, 2 * coarse_cells);
}

EndState propagate(const LevelTable& level, double lambda, int stride,
                   std::vector<double>* u_nodes, std::vector<double>* v_nodes,
                   std::vector<double>* u2_running) {
    const CellWeights w = CellWeights::make(lambda, level.h);
    double u = 0.0, v = 1.0, q = 0.0;
    int flips = 0;
    double last_nonzero = 0.0;

    const bool collect = stride > 0;
    if (collect) {
        const int n = level.cells / stride;
        if (u_nodes) { u_nodes->assign(n + 1, 0.0); (*u_nodes)[0] = u; }
        if (v_nodes) { v_nodes->assign(n + 1, 0.0); (*v_nodes)[0] = v; }
        if (u2_running) { u2_running->assign(n + 1, 0.0); }
    }

    for (int i = 0; i < level.cells; ++i) {
        const double s = level.mid[i];
        const double uw = v + s * u;  // u' at cell entry
        q += u * u * w.icc + 2.0 * u * uw * w.ics + uw * uw * w.iss;
        const double u1 = w.c * u + w.sn * uw;
        const double w1 = -lambda * w.sn * u + w.c * uw;
        u = u1;
        v = w1 - s * u1;
        if (i + 1 < level.cells) {  // interior node
            if (u != 0.0) {
                if (last_nonzero != 0.0 && (u > 0.0) != (last_nonzero > 0.0)) ++flips;
                last_nonzero = u;
            }
        }
        if (collect && (i + 1) % stride == 0) {
            const int idx = (i + 1) / stride;
            if (u_nodes) (*u_nodes)[idx] = u;
            if (v_nodes) (*v_nodes)[idx] = v;
            if (u2_running) (*u2_running)[idx] = q;
        }
    }
    return EndState{u, v, q, flips};
}

EndState propagate_backward(const LevelTable& level, double lambda, int stride,
                            std::vector<double>* u_nodes, std::vector<double>* v_nodes) {
    const CellWeights w = CellWeights::make(lambda, level.h);
    double u = 0.0, v = 1.0, q = 0.0;

    const bool collect = stride > 0;
    const int n = collect ? level.cells / stride : 0;
    if (collect) {
        if (u_nodes) { u_nodes->assign(n + 1, 0.0); (*u_nodes)[n] = u; }
        if (v_nodes) { v_nodes->assign(n + 1, 0.0); (*v_nodes)[n] = v; }
    }

    for (int i = level.cells - 1; i >= 0; --i) {
        const double s = level.mid[i];
        const double uw = v + s * u;  // u' at the right end of the cell
        // inverse of the in-cell rotation: step by -h
        const double u0 = w.c * u - w.sn * uw;
        const double w0 = lambda * w.sn * u + w.c * uw;
        q += u0 * u0 * w.icc + 2.0 * u0 * w0 * w.ics + w0 * w0 * w.iss;
        u = u0;
        v = w0 - s * u0;
        if (collect && i % stride == 0) {
            const int idx = i / stride;
            if (u_nodes) (*u_nodes)[idx] = u;
            if (v_nodes) (*v_nodes)[idx] = v;
        }
    }
    return EndState{u, v, q, 0};
}

double mismatch(const PotentialTables& pt, double lambda) {
    const EndState a = propagate(pt.coarse(), lambda);
    const EndState b = propagate(pt.fine(), lambda);
    return (4.0 * b.u_end - a.u_end) / 3.0;
}

int oscillation_count(const PotentialTables& pt, double lambda) {
    return propagate(pt.fine(), lambda).sign_changes;
}

namespace {

SolveResult combine(const PotentialTables& pt, double lambda, bool backward) {
    const int m = pt.storage_m();
    std::vector<double> ua, va, qa, ub, vb, qb;
    EndState ea, eb;
    if (!backward) {
        ea = propagate(pt.coarse(), lambda, pt.coarse().cells / m, &ua, &va, &qa);
        eb = propagate(pt.fine(), lambda, pt.fine().cells / m, &ub, &vb, &qb);
    } else {
        ea = propagate_backward(pt.coarse(), lambda, pt.coarse().cells / m, &ua, &va);
        eb = propagate_backward(pt.fine(), lambda, pt.fine().cells / m, &ub, &vb);
    }
    SolveResult r;
    r.u.resize(m + 1);
    r.v.resize(m + 1);
    for (int i = 0; i <= m; ++i) {
        r.u[i] = (4.0 * ub[i] - ua[i]) / 3.0;
        r.v[i] = (4.0 * vb[i] - va[i]) / 3.0;
    }
    if (!backward) {
        r.q_int.resize(m + 1);
        for (int i = 0; i <= m; ++i) r.q_int[i] = (4.0 * qb[i] - qa[i]) / 3.0;
    }
    r.int_u2 = (4.0 * eb.int_u2 - ea.int_u2) / 3.0;
    r.u_end = (4.0 * eb.u_end - ea.u_end) / 3.0;
    r.v_end = (4.0 * eb.v_end - ea.v_end) / 3.0;
    return r;
}

}  // namespace

SolveResult solve_forward(const PotentialTables& pt, double lambda) {
    return combine(pt, lambda, false);
}

SolveResult solve_backward(const PotentialTables& pt, double lambda) {
    return combine(pt, lambda, true);
}

}  // namespace slspec::detail
