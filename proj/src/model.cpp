#include "bdrift/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bdrift {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw std::domain_error(std::string(name) + " must be finite");
}

void check_window(const DiscountedModel& m, double x) {
    require_finite(x, "x");
    if (std::abs(x) > m.eval_window)
        throw std::range_error("x outside the evaluation window |x| <= " +
                               std::to_string(m.eval_window));
}

DiscountedModel build(double mu1, double mu2, double r) {
    require_finite(r, "r");
    if (r <= 0.0) throw std::domain_error("discount rate r must be positive");

    DiscountedModel m;
    m.params = ModelParams{mu1, mu2};
    m.r = r;
    const double s1 = std::sqrt(mu1 * mu1 + 2.0 * r);
    const double s2 = std::sqrt(mu2 * mu2 + 2.0 * r);
    m.lam1_minus = -s1 - mu1;
    m.lam1_plus = s1 - mu1;
    m.lam2_minus = -s2 - mu2;
    m.lam2_plus = s2 - mu2;
    m.a1 = (m.lam1_plus - m.lam2_minus) / (2.0 * s1);
    m.a2 = (m.lam2_minus - m.lam1_minus) / (2.0 * s1);
    m.b1 = (m.lam1_plus - m.lam2_minus) / (2.0 * s2);
    m.b2 = (m.lam2_plus - m.lam1_plus) / (2.0 * s2);
    m.eval_window = 700.0 / (s2 + mu2);  // largest exponent is |lam2_minus|
    return m;
}

}  // namespace

ModelParams make_params(double mu1, double mu2) {
    require_finite(mu1, "mu1");
    require_finite(mu2, "mu2");
    if (mu1 < 0.0) throw std::domain_error("mu1 must be nonnegative");
    if (mu1 >= mu2) throw std::domain_error("drifts must satisfy mu1 < mu2");
    return ModelParams{mu1, mu2};
}

double drift(const ModelParams& p, double x) { return x < 0.0 ? p.mu1 : p.mu2; }

double scale(const ModelParams& p, double x) {
    const double mu = x < 0.0 ? p.mu1 : p.mu2;
    if (mu == 0.0) return x;
    return -std::expm1(-2.0 * mu * x) / (2.0 * mu);
}

double scale_density(const ModelParams& p, double x) {
    return std::exp(-2.0 * (x < 0.0 ? p.mu1 : p.mu2) * x);
}

double speed_density(const ModelParams& p, double x) {
    return 2.0 * std::exp(2.0 * (x < 0.0 ? p.mu1 : p.mu2) * x);
}

DiscountedModel make_model(const ModelParams& params, double r) {
    return build(make_params(params.mu1, params.mu2).mu1, params.mu2, r);
}

DiscountedModel make_model_unchecked(double mu1, double mu2, double r) {
    require_finite(mu1, "mu1");
    require_finite(mu2, "mu2");
    if (mu1 < 0.0 || mu1 > mu2) throw std::domain_error("drifts must satisfy 0 <= mu1 <= mu2");
    return build(mu1, mu2, r);
}

double psi(const DiscountedModel& m, double x) {
    check_window(m, x);
    if (x < 0.0) return std::exp(m.lam1_plus * x);
    return m.b1 * std::exp(m.lam2_plus * x) + m.b2 * std::exp(m.lam2_minus * x);
}

double psi_prime(const DiscountedModel& m, double x) {
    check_window(m, x);
    if (x < 0.0) return m.lam1_plus * std::exp(m.lam1_plus * x);
    return m.b1 * m.lam2_plus * std::exp(m.lam2_plus * x) +
           m.b2 * m.lam2_minus * std::exp(m.lam2_minus * x);
}

double psi_second(const DiscountedModel& m, double x) {
    check_window(m, x);
    if (x < 0.0) return m.lam1_plus * m.lam1_plus * std::exp(m.lam1_plus * x);
    return m.b1 * m.lam2_plus * m.lam2_plus * std::exp(m.lam2_plus * x) +
           m.b2 * m.lam2_minus * m.lam2_minus * std::exp(m.lam2_minus * x);
}

double phi(const DiscountedModel& m, double x) {
    check_window(m, x);
    if (x < 0.0) return m.a1 * std::exp(m.lam1_minus * x) + m.a2 * std::exp(m.lam1_plus * x);
    return std::exp(m.lam2_minus * x);
}

double phi_prime(const DiscountedModel& m, double x) {
    check_window(m, x);
    if (x < 0.0)
        return m.a1 * m.lam1_minus * std::exp(m.lam1_minus * x) +
               m.a2 * m.lam1_plus * std::exp(m.lam1_plus * x);
    return m.lam2_minus * std::exp(m.lam2_minus * x);
}

double phi_second(const DiscountedModel& m, double x) {
    check_window(m, x);
    if (x < 0.0)
        return m.a1 * m.lam1_minus * m.lam1_minus * std::exp(m.lam1_minus * x) +
               m.a2 * m.lam1_plus * m.lam1_plus * std::exp(m.lam1_plus * x);
    return m.lam2_minus * m.lam2_minus * std::exp(m.lam2_minus * x);
}

double wronskian(const DiscountedModel& m) { return m.lam1_plus - m.lam2_minus; }

std::vector<double> Grid::points() const {
    std::vector<double> xs(static_cast<size_t>(n));
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) xs[static_cast<size_t>(i)] = lo + h * i;
    xs.back() = hi;
    return xs;
}

Grid make_grid(double lo, double hi, int n) {
    require_finite(lo, "lo");
    require_finite(hi, "hi");
    if (!(lo < hi)) throw std::domain_error("grid requires lo < hi");
    if (n < 2) throw std::domain_error("grid requires n >= 2");
    return Grid{lo, hi, n};
}

}  // namespace bdrift
