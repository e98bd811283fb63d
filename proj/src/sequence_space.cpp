#include "slspec/sequence_space.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "slspec/grid_function.hpp"

namespace slspec {

SpectralData::SpectralData(double theta_, std::vector<double> entries)
    : theta(theta_), K(static_cast<int>(entries.size())), s(std::move(entries)) {
    if (K % 2 != 0) throw std::invalid_argument("SpectralData: K must be even");
}

SpectralData operator-(const SpectralData& a, const SpectralData& b) {
    if (a.K != b.K) throw std::invalid_argument("SpectralData: length mismatch");
    std::vector<double> d(a.s.size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = a.s[i] - b.s[i];
    return SpectralData(a.theta, std::move(d));
}

std::vector<double> e_sequence(int p, int K) {
    if (p < 1) throw std::invalid_argument("e_sequence: p must be >= 1");
    std::vector<double> e(K, 0.0);
    if (p % 2 == 1) {
        for (int pos = 2; pos <= K; pos += 2) e[pos - 1] = std::pow(pos, -p);
    } else {
        for (int pos = 1; pos <= K; pos += 2) e[pos - 1] = std::pow(pos + 1, -p);
    }
    return e;
}

int ld_model_count(double theta) {
    if (theta < 0.0) throw std::invalid_argument("ld_model_count: theta must be >= 0");
    return static_cast<int>(std::floor(theta + 0.5));
}

LdDecomposition ld_decompose(const SpectralData& s, double theta) {
    if (theta < 0.0) throw std::invalid_argument("ld_decompose: theta must be >= 0");
    if (s.K < 16) throw std::invalid_argument("ld_decompose: need K >= 16");
    const int K = s.K;
    const int m = ld_model_count(theta);

    LdDecomposition out;
    out.m = m;
    out.c.assign(m, 0.0);
    out.remainder = s.s;

    if (m > 0) {
        std::vector<std::vector<double>> e(m);
        for (int p = 1; p <= m; ++p) e[p - 1] = e_sequence(p, K);

        // weighted LS over the tail window; the model columns split by parity
        // so the normal equations stay tiny either way
        const int lo = K / 2;
        Eigen::MatrixXd ata = Eigen::MatrixXd::Zero(m, m);
        Eigen::VectorXd atb = Eigen::VectorXd::Zero(m);
        for (int pos = lo; pos <= K; ++pos) {
            const double w = std::pow(static_cast<double>(pos), 2.0 * theta);
            for (int p = 0; p < m; ++p) {
                const double ep = e[p][pos - 1];
                if (ep == 0.0) continue;
                atb(p) += w * ep * s.s[pos - 1];
                for (int q = 0; q < m; ++q) ata(p, q) += w * ep * e[q][pos - 1];
            }
        }
        for (int p = 0; p < m; ++p)
            if (ata(p, p) == 0.0) ata(p, p) = 1.0;  // empty column, coefficient stays 0
        Eigen::VectorXd coef = ata.ldlt().solve(atb);
        for (int p = 0; p < m; ++p) {
            out.c[p] = coef(p);
            for (int pos = 1; pos <= K; ++pos) out.remainder[pos - 1] -= coef(p) * e[p][pos - 1];
        }
    }

    double acc = 0.0;
    for (int pos = 1; pos <= K; ++pos)
        acc += std::pow(static_cast<double>(pos), 2.0 * theta) * out.remainder[pos - 1] *
               out.remainder[pos - 1];
    for (double cp : out.c) acc += cp * cp;
    out.norm = std::sqrt(acc);
    return out;
}

double ld_norm(const SpectralData& s, double theta) {
    return ld_decompose(s, theta).norm;
}

OmegaReport check_omega(const SpectralData& s) {
    if (s.K < 2) throw std::invalid_argument("check_omega: need K >= 2");
    const double half_pi = kPi / 2;
    OmegaReport rep;

    bool ok = s.s[1] >= 0.0;  // s_2 >= 0
    double max_gap = 0.0;
    for (int k = 1; k + 1 <= s.pairs(); ++k) {
        const double gap = s.s[2 * k - 1] - s.s[2 * (k + 1) - 1];
        max_gap = std::max(max_gap, gap);
        if (gap >= 1.0) ok = false;
    }
    double min_alpha_side = half_pi;  // slack of s_{2k-1} >= -pi/2 + h
    for (int k = 1; k <= s.pairs(); ++k) {
        const double slack = s.s[2 * k - 2] + half_pi;
        min_alpha_side = std::min(min_alpha_side, slack);
        if (slack <= 0.0) ok = false;
    }
    rep.in_omega = ok;
    rep.h_gap = 1.0 - max_gap;
    rep.h_alpha = min_alpha_side;
    rep.h_max = ok ? std::min(1.0, std::min(rep.h_gap, rep.h_alpha)) : 0.0;
    return rep;
}

OmegaHatReport check_omega_hat(const SpectralData& s) {
    if (s.K < 2) throw std::invalid_argument("check_omega_hat: need K >= 2");
    OmegaHatReport rep;
    double prev = -1.0;
    for (int k = 1; k <= s.pairs(); ++k) {
        const double r = s.sqrt_lambda(k);
        if (r < 0.0) {
            rep.reason = "sqrt(lambda_" + std::to_string(k) + ") negative";
            return rep;
        }
        if (r * r <= prev) {
            rep.reason = "lambda_" + std::to_string(k) + " not strictly increasing";
            return rep;
        }
        prev = r * r;
        if (s.alpha(k) <= 0.0) {
            rep.reason = "alpha_" + std::to_string(k) + " not positive";
            return rep;
        }
    }
    rep.admissible = true;
    return rep;
}

SpectralData shift_data(const SpectralData& s, double c) {
    constexpr double kZeroTol = 1e-12;
    std::vector<double> out(s.s.size());
    for (int k = 1; k <= s.pairs(); ++k) {
        const double lam = s.lambda(k);
        if (lam + c <= 0.0 && std::abs(lam + c) > kZeroTol)
            throw std::domain_error("shift_data: lambda_k + c must stay positive");
        out[2 * k - 1] = std::sqrt(std::max(lam + c, 0.0)) - k;
        const double rho = (lam > kZeroTol) ? (lam + c) / lam : c;
        out[2 * k - 2] = rho * s.alpha(k) - kPi / 2;
    }
    return SpectralData(s.theta, std::move(out));
}

}  // namespace slspec
