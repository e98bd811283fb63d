#include "slspec/derivative_maps.hpp"

#include <cmath>
#include <stdexcept>

namespace slspec {

namespace {

// int_0^pi (pi - t) cos(j t) cos(m t) dt  (j >= 0, m >= 1)
double weighted_cos_cos(int j, int m) {
    if (j == m) return kPi * kPi / 4;
    auto term = [](int n) -> double {
        if (n == 0) return kPi * kPi / 2;
        return (n % 2 == 0) ? 0.0 : 2.0 / (static_cast<double>(n) * n);
    };
    return 0.5 * (term(std::abs(j - m)) + term(j + m));
}

// int_0^pi cos(j t) sin(m t) dt
double cos_sin(int j, int m) {
    if (j == m) return 0.0;
    const int s = j + m;
    if (s % 2 == 0) return 0.0;
    return 2.0 * m / (static_cast<double>(m) * m - static_cast<double>(j) * j);
}

// moments of the linear ramp (x - pi/2)
double ramp_cos_moment(int m2k) {  // int (pi - t)(t - pi/2) cos(m t) dt, m even
    return -kPi / (static_cast<double>(m2k) * m2k);
}
double ramp_sin_moment(int m2k) {  // int (t - pi/2) sin(m t) dt, m even
    return -kPi / m2k;
}

constexpr double kFdRelStep = 1e-5;

}  // namespace

std::vector<double> T_apply(const GridFunction& sigma, int K) {
    if (!sigma.has_series())
        throw std::invalid_argument("T_apply: potential needs a series representation");
    const auto& c = sigma.coeffs();
    const int J = static_cast<int>(c.size());
    std::vector<double> out(K, 0.0);
    for (int k = 1; 2 * k <= K; ++k) {
        const int m = 2 * k;
        double odd = sigma.slope() * ramp_cos_moment(m);
        double even = sigma.slope() * ramp_sin_moment(m);
        for (int j = 1; j <= J; ++j) {
            if (c[j - 1] == 0.0) continue;
            odd += c[j - 1] * weighted_cos_cos(j, m);
            even += c[j - 1] * cos_sin(j, m);
        }
        out[2 * k - 2] = -odd;
        out[2 * k - 1] = -even / kPi;
    }
    return out;
}

GridFunction T_model_row(int k, int m) {
    const int pair = (k + 1) / 2;
    std::vector<double> s(m + 1);
    for (int i = 0; i <= m; ++i) {
        const double x = kPi * i / m;
        s[i] = (k % 2 == 1) ? (x - kPi) * std::cos(2.0 * pair * x)
                            : -std::sin(2.0 * pair * x) / kPi;
    }
    return GridFunction::from_samples(std::move(s));
}

GridFunction T_inverse_row(int k, int m) {
    const int pair = (k + 1) / 2;
    std::vector<double> s(m + 1);
    // exact means: (8/pi^2) sin^2(kx) averages to 4/pi^2, and
    // -(4/pi) x sin(2kx) averages to 2/(pi k)
    const double mean = (k % 2 == 1) ? 4.0 / (kPi * kPi) : 2.0 / (kPi * pair);
    for (int i = 0; i <= m; ++i) {
        const double x = kPi * i / m;
        if (k % 2 == 1) {
            const double sn = std::sin(pair * x);
            s[i] = 8.0 / (kPi * kPi) * sn * sn - mean;
        } else {
            s[i] = -4.0 / kPi * x * std::sin(2.0 * pair * x) - mean;
        }
    }
    return GridFunction::from_samples(std::move(s));
}

GridFunction T_inverse(const SpectralData& s, int m) {
    GridFunction acc = GridFunction::zero(m);
    for (int k = 1; k <= s.K; ++k)
        if (s.s[k - 1] != 0.0) acc += s.s[k - 1] * T_inverse_row(k, m);
    return acc.projected_zero_mean();
}

namespace {

// pointwise z z' from a backward solve; z' = z^{[1]} + sigma z
std::vector<double> zz_prime(const EigenSystem& es, double lambda) {
    auto [z, z1] = solve_z_pair(*es.tables, lambda);
    const auto& sig = es.sigma.samples();
    std::vector<double> p(z.samples().size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = z[i] * (z1[i] + sig[i] * z[i]);
    return p;
}

// pointwise y^2(x, lambda) = lambda u^2 for the y^{[1]}(0) = sqrt(lambda) family
std::vector<double> y_squared(const EigenSystem& es, double lambda) {
    const ShootingSolution s = solve_u(*es.tables, lambda);
    std::vector<double> p(s.u.samples().size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = lambda * s.u[i] * s.u[i];
    return p;
}

}  // namespace

GridFunction phi_basis(const EigenSystem& es, int k) {
    if (k < 1 || k > 2 * es.count()) throw std::invalid_argument("phi_basis: index out of range");
    const int pair = (k + 1) / 2;
    const double lam = es.lambdas[pair - 1];
    const double al = es.alphas[pair - 1];
    const int m = es.sigma.m();
    std::vector<double> out(m + 1);

    if (k % 2 == 0) {
        // -y' y / (alpha sqrt(lambda)); y' = y^{[1]} + sigma y
        const auto& y = es.y[pair - 1];
        const auto& y1 = es.y1[pair - 1];
        const auto& sig = es.sigma.samples();
        for (int i = 0; i <= m; ++i) {
            const double yp = y1[i] + sig[i] * y[i];
            out[i] = -yp * y[i] / (al * std::sqrt(lam));
        }
    } else {
        // 2 alpha lambda d/dlambda (z z') by central difference
        const double dl = kFdRelStep * std::max(1.0, lam);
        const std::vector<double> pp = zz_prime(es, lam + dl);
        const std::vector<double> pm = zz_prime(es, lam - dl);
        for (int i = 0; i <= m; ++i) out[i] = 2.0 * al * lam * (pp[i] - pm[i]) / (2.0 * dl);
    }
    return GridFunction::from_samples(std::move(out));
}

GridFunction psi_basis(const EigenSystem& es, int k) {
    if (k < 1 || k > 2 * es.count()) throw std::invalid_argument("psi_basis: index out of range");
    const int pair = (k + 1) / 2;
    const double lam = es.lambdas[pair - 1];
    const double al = es.alphas[pair - 1];
    const int m = es.sigma.m();
    std::vector<double> out(m + 1);

    if (k % 2 == 1) {
        const auto& y = es.y[pair - 1];
        for (int i = 0; i <= m; ++i) out[i] = 2.0 / (al * al) * y[i] * y[i];
    } else {
        const double dl = kFdRelStep * std::max(1.0, lam);
        const std::vector<double> wp = y_squared(es, lam + dl);
        const std::vector<double> wm = y_squared(es, lam - dl);
        for (int i = 0; i <= m; ++i)
            out[i] = -4.0 * std::sqrt(lam) / al * (wp[i] - wm[i]) / (2.0 * dl);
    }
    return GridFunction::from_samples(std::move(out)).projected_zero_mean();
}

BasisFamily phi_family(const EigenSystem& es, int K) {
    BasisFamily fam;
    fam.kind = BasisFamily::Kind::Phi;
    fam.source = std::make_shared<EigenSystem>(es);
    fam.entries.reserve(K);
    for (int k = 1; k <= K; ++k) fam.entries.push_back(phi_basis(es, k));
    return fam;
}

BasisFamily psi_family(const EigenSystem& es, int K) {
    BasisFamily fam;
    fam.kind = BasisFamily::Kind::Psi;
    fam.source = std::make_shared<EigenSystem>(es);
    fam.entries.reserve(K);
    for (int k = 1; k <= K; ++k) fam.entries.push_back(psi_basis(es, k));
    return fam;
}

std::vector<double> frechet_forward(const EigenSystem& es, const GridFunction& f, int K) {
    if (K > 2 * es.count()) throw std::invalid_argument("frechet_forward: K exceeds eigen-system");
    std::vector<double> out(K);
    for (int k = 1; k <= K; ++k) out[k - 1] = l2_inner(phi_basis(es, k), f);
    return out;
}

std::vector<double> frechet_forward(const GridFunction& sigma, const GridFunction& f, int K) {
    const EigenSystem es = eigen_system(sigma, (K + 1) / 2);
    return frechet_forward(es, f, K);
}

GridFunction frechet_inverse(const EigenSystem& es, const std::vector<double>& ds) {
    if (static_cast<int>(ds.size()) > 2 * es.count())
        throw std::invalid_argument("frechet_inverse: increment longer than eigen-system");
    GridFunction acc = GridFunction::zero(es.sigma.m());
    for (size_t k = 1; k <= ds.size(); ++k)
        if (ds[k - 1] != 0.0) acc += ds[k - 1] * psi_basis(es, static_cast<int>(k));
    return acc.projected_zero_mean();
}

}  // namespace slspec
