#include "slspec/shooting.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slspec {

using detail::PotentialTables;

namespace {

constexpr double kLambdaZeroTol = 1e-8;

// guarded secant iteration on a sign-change bracket; a forced bisection every
// third step guarantees convergence
double refine_root(const PotentialTables& pt, double a, double b, double fa, double fb) {
    for (int it = 0; it < 200; ++it) {
        const double width = b - a;
        if (width < 1e-13 * std::max(1.0, std::abs(b))) break;
        double x = b - fb * width / (fb - fa);
        if (it % 3 == 2 || !(x > a + 0.01 * width && x < b - 0.01 * width))
            x = a + 0.5 * width;
        const double fx = detail::mismatch(pt, x);
        if (fx == 0.0) return x;
        if ((fx > 0) == (fa > 0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    return std::abs(fa) < std::abs(fb) ? a : b;
}

double find_eigenvalue(const PotentialTables& pt, int k, double lo_hint, bool lo_exact) {
    // bracket [lo, hi] with count(lo) <= k-1 and count(hi) >= k
    double lo = lo_hint;
    int clo = lo_exact ? k - 1 : detail::oscillation_count(pt, lo);
    {
        double span = std::max(1.0, 0.1 * std::abs(lo_hint));
        for (int it = 0; clo > k - 1; ++it) {
            if (it > 60) throw std::runtime_error("eigenvalue bracket: lower expansion failed");
            lo -= span;
            span *= 2.0;
            clo = detail::oscillation_count(pt, lo);
        }
    }
    double hi = lo + std::max(1.0, 2.0 * k + 1.0);
    int chi = detail::oscillation_count(pt, hi);
    {
        double span = std::max(1.0, 0.25 * (hi - lo));
        for (int it = 0; chi < k; ++it) {
            if (it > 60) throw std::runtime_error("eigenvalue bracket: upper expansion failed");
            hi += span;
            span *= 2.0;
            chi = detail::oscillation_count(pt, hi);
        }
    }
    // count bisection until exactly one eigenvalue sits inside and the
    // extrapolated mismatch changes sign across the bracket; the mismatch can
    // disagree with the fine-level count within O(h^2) of an eigenvalue
    for (int it = 0; it < 120; ++it) {
        if (clo == k - 1 && chi == k) {
            const double fa = detail::mismatch(pt, lo);
            const double fb = detail::mismatch(pt, hi);
            if ((fa > 0) != (fb > 0)) return refine_root(pt, lo, hi, fa, fb);
        }
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const int cm = detail::oscillation_count(pt, mid);
        if (cm >= k) {
            hi = mid;
            chi = cm;
        } else {
            lo = mid;
            clo = cm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::shared_ptr<const PotentialTables> make_tables(const GridFunction& sigma) {
    return std::make_shared<const PotentialTables>(sigma, kDefaultStorageM, kDefaultCoarseCells);
}

std::vector<double> eigenvalues(const PotentialTables& pt, int n) {
    if (n < 1) throw std::invalid_argument("eigenvalues: n must be >= 1");
    std::vector<double> lam(n);
    double offset = 0.0;  // running estimate of lambda_k - k^2
    for (int k = 1; k <= n; ++k) {
        double lo;
        bool lo_exact = false;
        if (k == 1) {
            lo = 1.0 + offset - 1.0;
        } else {
            lo = lam[k - 2] + 1e-9 * (1.0 + std::abs(lam[k - 2]));
            lo_exact = true;
        }
        lam[k - 1] = find_eigenvalue(pt, k, lo, lo_exact);
        offset = lam[k - 1] - static_cast<double>(k) * k;
    }
    return lam;
}

std::vector<double> eigenvalues(const GridFunction& sigma, int n) {
    return eigenvalues(*make_tables(sigma), n);
}

std::vector<double> norming_constants(const PotentialTables& pt,
                                      const std::vector<double>& lambdas) {
    std::vector<double> al(lambdas.size());
    for (size_t i = 0; i < lambdas.size(); ++i) {
        const double lam = lambdas[i];
        const double ia = detail::propagate(pt.coarse(), lam).int_u2;
        const double ib = detail::propagate(pt.fine(), lam).int_u2;
        const double int_u2 = (4.0 * ib - ia) / 3.0;
        al[i] = std::abs(lam) < kLambdaZeroTol ? int_u2 : lam * int_u2;
    }
    return al;
}

std::vector<double> norming_constants(const GridFunction& sigma,
                                      const std::vector<double>& lambdas) {
    return norming_constants(*make_tables(sigma), lambdas);
}

ShootingSolution solve_u(const PotentialTables& pt, double lambda) {
    if (!std::isfinite(lambda)) throw std::invalid_argument("solve_u: lambda must be finite");
    const detail::SolveResult r = detail::solve_forward(pt, lambda);
    ShootingSolution sol;
    sol.lambda = lambda;
    sol.u = GridFunction::from_samples(r.u);
    sol.u1 = GridFunction::from_samples(r.v);
    sol.q_int = GridFunction::from_samples(r.q_int);
    return sol;
}

ShootingSolution solve_u(const GridFunction& sigma, double lambda) {
    return solve_u(*make_tables(sigma), lambda);
}

std::pair<GridFunction, GridFunction> solve_z_pair(const PotentialTables& pt, double lambda) {
    if (lambda <= 0.0)
        throw std::domain_error("solve_z: normalization int z^2 = 1/lambda needs lambda > 0");
    const detail::SolveResult r = detail::solve_backward(pt, lambda);
    if (r.int_u2 <= 0.0) throw std::runtime_error("solve_z: degenerate backward solution");
    const double scale = 1.0 / std::sqrt(lambda * r.int_u2);
    std::vector<double> z(r.u.size()), z1(r.v.size());
    for (size_t i = 0; i < z.size(); ++i) {
        z[i] = scale * r.u[i];
        z1[i] = scale * r.v[i];
    }
    return {GridFunction::from_samples(std::move(z)), GridFunction::from_samples(std::move(z1))};
}

GridFunction solve_z(const GridFunction& sigma, double lambda) {
    return solve_z_pair(*make_tables(sigma), lambda).first;
}

SpectralData spectral_map(const GridFunction& sigma, int n, double theta) {
    const auto pt = make_tables(sigma);
    const std::vector<double> lam = eigenvalues(*pt, n);
    const std::vector<double> al = norming_constants(*pt, lam);
    std::vector<double> s(2 * n);
    for (int k = 1; k <= n; ++k) {
        double lk = lam[k - 1];
        if (lk < 0.0) {
            if (lk < -kLambdaZeroTol)
                throw std::domain_error("spectral_map: negative eigenvalue lambda_" +
                                        std::to_string(k) + ", data are not real");
            lk = 0.0;
        }
        s[2 * k - 2] = al[k - 1] - kPi / 2;
        s[2 * k - 1] = std::sqrt(lk) - k;
    }
    return SpectralData(theta, std::move(s));
}

EigenSystem eigen_system(const GridFunction& sigma, int n) {
    EigenSystem es;
    es.sigma = sigma;
    es.tables = make_tables(sigma);
    es.lambdas = eigenvalues(*es.tables, n);
    es.alphas = norming_constants(*es.tables, es.lambdas);
    if (es.lambdas.front() <= 0.0)
        throw std::domain_error("eigen_system: needs lambda_1 > 0 for the y/z normalizations");
    es.y.reserve(n);
    es.y1.reserve(n);
    es.z.reserve(n);
    es.z1.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double lam = es.lambdas[k];
        const double rt = std::sqrt(lam);
        ShootingSolution s = solve_u(*es.tables, lam);
        es.y.push_back(rt * s.u);
        es.y1.push_back(rt * s.u1);
        auto [z, z1] = solve_z_pair(*es.tables, lam);
        es.z.push_back(std::move(z));
        es.z1.push_back(std::move(z1));
    }
    return es;
}

}  // namespace slspec
