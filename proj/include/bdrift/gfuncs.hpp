#pragma once

#include <optional>

#include "bdrift/model.hpp"

namespace bdrift {

/// Stationary points of the representing function G_-: x1 = (mu1 - r)/r on
/// the negative half-line (present when r > mu1), x0 = (mu2 - r)/r on the
/// positive half-line (present when r < mu2).
struct GStationaryPoints {
    std::optional<double> x1;
    std::optional<double> x0;
};

GStationaryPoints stationary_points(const DiscountedModel& m);

/// Representing functions for the reward g(x) = (1+x)^+:
///   G_-(x) = (psi'(x)(x+1) - psi(x)) / S'(x)
///   G_+(x) = (phi(x) - (1+x) phi'(x)) / S'(x)
/// Evaluated from fused closed forms (the 1/S' factor is folded into the
/// exponents), so they stay accurate where S' underflows.
double g_minus(const DiscountedModel& m, double x);
double g_plus(const DiscountedModel& m, double x);

/// x-derivatives, m(x) times the speed-measure derivatives:
///   G_-'(x) = m(x) psi(x) (r(1+x) - mu(x))
///   G_+'(x) = m(x) phi(x) (mu(x) - r(1+x))
/// Double-valued at the drift breakpoint; the two-argument overloads throw
/// std::domain_error at x == 0, pass a Side to select a one-sided value.
double g_minus_dm(const DiscountedModel& m, double x);
double g_minus_dm(const DiscountedModel& m, double x, Side side);
double g_plus_dm(const DiscountedModel& m, double x);
double g_plus_dm(const DiscountedModel& m, double x, Side side);

/// Threshold equation psi'(x)(x+1) - psi(x) = 0: same zeros as G_- but free
/// of the 1/S' factor, so it is the form handed to root finders. eqg_prime
/// is the x-derivative psi''(x)(x+1) (one-sided at 0, right branch).
double eqg(const DiscountedModel& m, double x);
double eqg_prime(const DiscountedModel& m, double x);

}  // namespace bdrift
