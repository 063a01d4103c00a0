#pragma once

#include <vector>

namespace bdrift {

/// Side selector for one-sided evaluations at points where a quantity jumps
/// (the drift breakpoint at 0, segment boundaries of a value function).
enum class Side { left, right };

/// Drift of the diffusion dX = mu(X) dt + dW: mu1 on x < 0, mu2 on x >= 0,
/// with 0 <= mu1 < mu2.
struct ModelParams {
    double mu1;
    double mu2;
};

/// Validates 0 <= mu1 < mu2, both finite. Throws std::domain_error otherwise.
ModelParams make_params(double mu1, double mu2);

double drift(const ModelParams& p, double x);

/// Scale function S, its derivative S' and the speed-measure density m.
/// S(0) = 0, S'(0) = 1, m(0) = 2 (the x >= 0 branch at the breakpoint).
/// The mu1 = 0 branch of S is the analytic limit S(x) = x on x < 0.
double scale(const ModelParams& p, double x);
double scale_density(const ModelParams& p, double x);
double speed_density(const ModelParams& p, double x);

/// Exponents and pasting coefficients of the fundamental solutions of
/// (1/2)u'' + mu(x)u' = r u for discount rate r > 0:
///
///   psi_r(x) = exp(lam1_plus x)                              x < 0
///            = b1 exp(lam2_plus x) + b2 exp(lam2_minus x)    x >= 0
///   phi_r(x) = a1 exp(lam1_minus x) + a2 exp(lam1_plus x)    x < 0
///            = exp(lam2_minus x)                             x >= 0
///
/// a1 + a2 = 1 and b1 + b2 = 1 (continuity at 0); the coefficients make both
/// functions continuously differentiable at 0.
struct DiscountedModel {
    ModelParams params;
    double r;
    double lam1_minus, lam1_plus;
    double lam2_minus, lam2_plus;
    double a1, a2;
    double b1, b2;
    // Evaluations are restricted to |x| <= eval_window so no exponential
    // overflows; beyond it psi/phi throw std::range_error.
    double eval_window;
};

DiscountedModel make_model(const ModelParams& params, double r);

/// Same as make_model but permits mu1 == mu2 (requires 0 <= mu1 <= mu2).
/// With equal drifts the coefficients collapse to a1 = b1 = 1, a2 = b2 = 0
/// and psi/phi become the single-drift exponentials.
DiscountedModel make_model_unchecked(double mu1, double mu2, double r);

double psi(const DiscountedModel& m, double x);
double psi_prime(const DiscountedModel& m, double x);
double psi_second(const DiscountedModel& m, double x);
double phi(const DiscountedModel& m, double x);
double phi_prime(const DiscountedModel& m, double x);
double phi_second(const DiscountedModel& m, double x);

/// (psi' phi - psi phi')/S', constant in x; equals lam1_plus - lam2_minus.
double wronskian(const DiscountedModel& m);

/// Uniform grid with n >= 2 strictly increasing points on [lo, hi].
struct Grid {
    double lo;
    double hi;
    int n;
    std::vector<double> points() const;
};

Grid make_grid(double lo, double hi, int n);

}  // namespace bdrift
