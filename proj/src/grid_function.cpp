#include "slspec/grid_function.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace slspec {

namespace {

// Clenshaw evaluation of sum_{j>=1} c_j cos(j x).
double cosine_series(const std::vector<double>& c, double x) {
    const double t = std::cos(x);
    double b1 = 0.0, b2 = 0.0;
    for (int j = static_cast<int>(c.size()); j >= 1; --j) {
        const double b = 2.0 * t * b1 - b2 + c[j - 1];
        b2 = b1;
        b1 = b;
    }
    return t * b1 - b2;
}

void require_finite(const std::vector<double>& v) {
    for (double s : v)
        if (!std::isfinite(s)) throw std::invalid_argument("GridFunction: non-finite sample");
}

}  // namespace

GridFunction GridFunction::from_samples(std::vector<double> samples) {
    if (samples.size() < 2) throw std::invalid_argument("GridFunction: need at least 2 samples");
    require_finite(samples);
    GridFunction f;
    f.m_ = static_cast<int>(samples.size()) - 1;
    f.samples_ = std::move(samples);
    return f;
}

GridFunction GridFunction::from_series(int m, double slope, std::vector<double> coeffs) {
    if (m < 16) throw std::invalid_argument("GridFunction: grid resolution must be >= 16");
    require_finite(coeffs);
    if (!std::isfinite(slope)) throw std::invalid_argument("GridFunction: non-finite slope");
    GridFunction f;
    f.m_ = m;
    f.slope_ = slope;
    f.coeffs_ = std::move(coeffs);
    f.has_series_ = true;
    f.samples_.resize(m + 1);
    for (int i = 0; i <= m; ++i) {
        const double xi = kPi * i / m;
        f.samples_[i] = slope * (xi - kPi / 2) + cosine_series(f.coeffs_, xi);
    }
    return f;
}

GridFunction GridFunction::analyze(const std::vector<double>& samples, int coeff_count,
                                   double slope) {
    const int m = static_cast<int>(samples.size()) - 1;
    if (m < 16) throw std::invalid_argument("GridFunction: grid resolution must be >= 16");
    require_finite(samples);
    if (coeff_count > m / 2) coeff_count = m / 2;

    // remove the exact ramp first, then cosine-analyze the remainder
    std::vector<double> r(samples.size());
    for (int i = 0; i <= m; ++i) r[i] = samples[i] - slope * (kPi * i / m - kPi / 2);

    std::vector<double> c(coeff_count);
    for (int j = 1; j <= coeff_count; ++j) {
        double acc = 0.5 * (r[0] + (j % 2 == 0 ? r[m] : -r[m]));
        for (int i = 1; i < m; ++i) acc += r[i] * std::cos(j * kPi * i / m);
        c[j - 1] = 2.0 * acc / m;
    }
    return from_series(m, slope, std::move(c));
}

GridFunction GridFunction::zero(int m) {
    return from_series(m, 0.0, {});
}

double GridFunction::value_at(double x) const {
    if (has_series_) return slope_ * (x - kPi / 2) + cosine_series(coeffs_, x);
    // linear interpolation on raw samples
    const double t = std::clamp(x, 0.0, kPi) / h();
    const int i = std::min(static_cast<int>(t), m_ - 1);
    const double w = t - i;
    return (1.0 - w) * samples_[i] + w * samples_[i + 1];
}

double GridFunction::mean() const {
    if (m_ % 2 == 0) {  // composite Simpson; exact for pure cosine modes
        double acc = samples_.front() + samples_.back();
        for (int i = 1; i < m_; ++i) acc += (i % 2 ? 4.0 : 2.0) * samples_[i];
        return acc / (3.0 * m_);
    }
    double acc = 0.5 * (samples_.front() + samples_.back());
    for (int i = 1; i < m_; ++i) acc += samples_[i];
    return acc / m_;
}

GridFunction GridFunction::projected_zero_mean() const {
    GridFunction f = *this;
    const double mu = mean();
    for (double& s : f.samples_) s -= mu;
    return f;
}

void GridFunction::check_compatible(const GridFunction& g) const {
    if (m_ != g.m_) throw std::invalid_argument("GridFunction: grid mismatch");
}

GridFunction& GridFunction::operator+=(const GridFunction& g) {
    check_compatible(g);
    for (int i = 0; i <= m_; ++i) samples_[i] += g.samples_[i];
    if (has_series_ && g.has_series_) {
        slope_ += g.slope_;
        if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), 0.0);
        for (size_t j = 0; j < g.coeffs_.size(); ++j) coeffs_[j] += g.coeffs_[j];
    } else {
        has_series_ = false;
        slope_ = 0.0;
        coeffs_.clear();
    }
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& g) {
    GridFunction neg = g;
    neg *= -1.0;
    return *this += neg;
}

GridFunction& GridFunction::operator*=(double a) {
    for (double& s : samples_) s *= a;
    slope_ *= a;
    for (double& c : coeffs_) c *= a;
    return *this;
}

double ramp_coeff(int j) {
    return (j % 2 == 1) ? -4.0 / (kPi * j * j) : 0.0;
}

// ---------------------------------------------------------------------------
// descriptor mini-language
// ---------------------------------------------------------------------------

namespace {

std::vector<double> parse_number_list(const std::string& body) {
    std::vector<double> vals;
    std::string item;
    std::stringstream ss(body);
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        vals.push_back(std::stod(item));
    }
    return vals;
}

// one term: optional scale factor followed by a base descriptor
GridFunction parse_term(std::string term, int m) {
    // strip whitespace
    term.erase(std::remove_if(term.begin(), term.end(),
                              [](unsigned char ch) { return std::isspace(ch); }),
               term.end());
    if (term.empty()) throw std::invalid_argument("function descriptor: empty term");

    double scale = 1.0;
    size_t pos = 0;
    if (term[pos] == '-') { scale = -1.0; ++pos; }
    size_t num_end = pos;
    while (num_end < term.size() &&
           (std::isdigit(static_cast<unsigned char>(term[num_end])) || term[num_end] == '.'))
        ++num_end;
    if (num_end > pos && num_end < term.size() && term[num_end] != 'e') {
        scale *= std::stod(term.substr(pos, num_end - pos));
        pos = num_end;
        if (pos < term.size() && term[pos] == '*') ++pos;
    }
    std::string base = term.substr(pos);

    // trailing "/<number>" divisor, e.g. "x/4"
    if (size_t slash = base.rfind('/'); slash != std::string::npos && slash > 0 &&
                                        base.find('[') == std::string::npos) {
        scale /= std::stod(base.substr(slash + 1));
        base = base.substr(0, slash);
    }

    GridFunction f;
    if (base == "zero" || base.empty()) {
        f = GridFunction::zero(m);
    } else if (base == "x") {
        f = GridFunction::from_series(m, 1.0, {});
    } else if (base.rfind("cos(", 0) == 0 || base.rfind("sin(", 0) == 0) {
        const bool is_cos = base[0] == 'c';
        const size_t close = base.find(')');
        if (close == std::string::npos) throw std::invalid_argument("descriptor: missing ')'");
        std::string arg = base.substr(4, close - 4);
        if (!arg.empty() && (arg.back() == 't' || arg.back() == 'x')) arg.pop_back();
        if (!arg.empty() && arg.back() == '*') arg.pop_back();
        const int freq = arg.empty() ? 1 : std::stoi(arg);
        if (freq < 1 || freq > m / 2)
            throw std::invalid_argument("descriptor: frequency outside (0, M/2]");
        if (is_cos) {
            std::vector<double> c(freq, 0.0);
            c[freq - 1] = 1.0;
            f = GridFunction::from_series(m, 0.0, std::move(c));
        } else {
            std::vector<double> s(m + 1);
            for (int i = 0; i <= m; ++i) s[i] = std::sin(freq * kPi * i / m);
            f = GridFunction::analyze(s, m / 2);
        }
    } else if (base.rfind("steps:[", 0) == 0 && base.back() == ']') {
        const std::vector<double> vals = parse_number_list(base.substr(7, base.size() - 8));
        if (vals.empty()) throw std::invalid_argument("descriptor: empty step list");
        std::vector<double> s(m + 1);
        const int nsteps = static_cast<int>(vals.size());
        for (int i = 0; i <= m; ++i) {
            int k = std::min(static_cast<int>(static_cast<double>(i) * nsteps / m), nsteps - 1);
            s[i] = vals[k];
        }
        f = GridFunction::analyze(s, m / 2);
    } else if (base.rfind("coeffs:[", 0) == 0 && base.back() == ']') {
        std::vector<double> c = parse_number_list(base.substr(8, base.size() - 9));
        if (static_cast<int>(c.size()) > m / 2)
            throw std::invalid_argument("descriptor: more coefficients than M/2 modes");
        f = GridFunction::from_series(m, 0.0, std::move(c));
    } else {
        throw std::invalid_argument("unknown function descriptor: '" + base + "'");
    }
    return scale * f;
}

}  // namespace

GridFunction make_grid_function(const std::string& spec_text, int m) {
    if (m < 16) throw std::invalid_argument("make_grid_function: M must be >= 16");
    GridFunction acc = GridFunction::zero(m);
    std::string term;
    int depth = 0;
    auto flush = [&]() {
        if (!term.empty()) acc += parse_term(term, m);
        term.clear();
    };
    for (size_t i = 0; i < spec_text.size(); ++i) {
        const char ch = spec_text[i];
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == '+' && depth == 0 && !term.empty()) {
            flush();
            continue;
        }
        term += ch;
    }
    flush();
    return acc;
}

GridFunction make_grid_function(const std::vector<double>& samples, int coeff_count) {
    return GridFunction::analyze(samples, coeff_count);
}

// ---------------------------------------------------------------------------
// norms, products, calculus
// ---------------------------------------------------------------------------

double sobolev_norm(const GridFunction& f, const SobolevParams& p) {
    p.validate();
    if (!f.has_series())
        throw std::invalid_argument("sobolev_norm: function has no series representation");
    const int jmax = f.slope() != 0.0
                         ? p.coeff_count
                         : std::min<int>(p.coeff_count, f.coeffs().size());
    double acc = 0.0;
    for (int j = 1; j <= jmax; ++j) {
        double cj = (j <= static_cast<int>(f.coeffs().size())) ? f.coeffs()[j - 1] : 0.0;
        cj += f.slope() * ramp_coeff(j);
        acc += std::pow(static_cast<double>(j), 2.0 * p.theta) * cj * cj;
    }
    return std::sqrt(acc * kPi / 2);
}

double l2_inner(const GridFunction& f, const GridFunction& g) {
    if (f.m() != g.m()) throw std::invalid_argument("l2_inner: grid mismatch");
    if (f.m() % 2 != 0) throw std::invalid_argument("l2_inner: grid size must be even");
    const int m = f.m();
    double acc = f[0] * g[0] + f[m] * g[m];
    for (int i = 1; i < m; ++i) acc += (i % 2 ? 4.0 : 2.0) * f[i] * g[i];
    return acc * f.h() / 3.0;
}

double integrate(const GridFunction& f) {
    const int m = f.m();
    if (m % 2 != 0) throw std::invalid_argument("integrate: grid size must be even");
    double acc = f[0] + f[m];
    for (int i = 1; i < m; ++i) acc += (i % 2 ? 4.0 : 2.0) * f[i];
    return acc * f.h() / 3.0;
}

GridFunction ddx(const GridFunction& f) {
    const int m = f.m();
    if (m < 5) throw std::invalid_argument("ddx: grid too small");
    const double h = f.h();
    std::vector<double> d(m + 1);
    for (int i = 2; i <= m - 2; ++i)
        d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    d[m - 1] = (3.0 * f[m] + 10.0 * f[m - 1] - 18.0 * f[m - 2] + 6.0 * f[m - 3] - f[m - 4]) / (12.0 * h);
    d[m] = (25.0 * f[m] - 48.0 * f[m - 1] + 36.0 * f[m - 2] - 16.0 * f[m - 3] + 3.0 * f[m - 4]) / (12.0 * h);
    return GridFunction::from_samples(std::move(d));
}

GridFunction antiderivative(const GridFunction& f) {
    const int m = f.m();
    const double h = f.h();
    std::vector<double> F(m + 1);
    F[0] = 0.0;
    for (int i = 2; i <= m; i += 2)
        F[i] = F[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    for (int i = 1; i <= m; i += 2) {
        if (i + 1 <= m)
            F[i] = F[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
        else
            F[i] = F[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    }
    return GridFunction::from_samples(std::move(F));
}

}  // namespace slspec
