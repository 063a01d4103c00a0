#include "bdrift/gfuncs.hpp"

#include <cmath>
#include <stdexcept>

namespace bdrift {

namespace {

double drift_of(const DiscountedModel& m, double x, Side side) {
    if (x < 0.0 || (x == 0.0 && side == Side::left)) return m.params.mu1;
    return m.params.mu2;
}

}  // namespace

GStationaryPoints stationary_points(const DiscountedModel& m) {
    GStationaryPoints p;
    if (m.r > m.params.mu1) p.x1 = (m.params.mu1 - m.r) / m.r;
    if (m.r < m.params.mu2) p.x0 = (m.params.mu2 - m.r) / m.r;
    return p;
}

// Fused forms use lam_plus + 2 mu = -lam_minus (per half-line), i.e.
// exp(lam x)/S'(x) = exp(-lam_conjugate x).
double g_minus(const DiscountedModel& m, double x) {
    if (x < 0.0) {
        return (m.lam1_plus * (1.0 + x) - 1.0) * std::exp(-m.lam1_minus * x);
    }
    return m.b1 * (m.lam2_plus * (1.0 + x) - 1.0) * std::exp(-m.lam2_minus * x) +
           m.b2 * (m.lam2_minus * (1.0 + x) - 1.0) * std::exp(-m.lam2_plus * x);
}

double g_plus(const DiscountedModel& m, double x) {
    if (x < 0.0) {
        return m.a1 * (1.0 - m.lam1_minus * (1.0 + x)) * std::exp(-m.lam1_plus * x) +
               m.a2 * (1.0 - m.lam1_plus * (1.0 + x)) * std::exp(-m.lam1_minus * x);
    }
    return (1.0 - m.lam2_minus * (1.0 + x)) * std::exp(-m.lam2_plus * x);
}

double g_minus_dm(const DiscountedModel& m, double x) {
    if (x == 0.0) throw std::domain_error("g_minus_dm is double-valued at x = 0; pass a Side");
    return g_minus_dm(m, x, Side::right);
}

double g_minus_dm(const DiscountedModel& m, double x, Side side) {
    const double mu = drift_of(m, x, side);
    return speed_density(m.params, x) * psi(m, x) * (m.r * (1.0 + x) - mu);
}

double g_plus_dm(const DiscountedModel& m, double x) {
    if (x == 0.0) throw std::domain_error("g_plus_dm is double-valued at x = 0; pass a Side");
    return g_plus_dm(m, x, Side::right);
}

double g_plus_dm(const DiscountedModel& m, double x, Side side) {
    const double mu = drift_of(m, x, side);
    return speed_density(m.params, x) * phi(m, x) * (mu - m.r * (1.0 + x));
}

double eqg(const DiscountedModel& m, double x) {
    return psi_prime(m, x) * (1.0 + x) - psi(m, x);
}

double eqg_prime(const DiscountedModel& m, double x) {
    return psi_second(m, x) * (1.0 + x);
}

}  // namespace bdrift
