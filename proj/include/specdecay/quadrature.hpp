// quadrature.hpp — adaptive Gauss-Kronrod integration for decaying integrands.
#pragma once

#include <functional>

namespace specdecay {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  enum class Tail { analytic_bound, extended_horizon } tail = Tail::analytic_bound;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error (includes any tail bound)
  int subdivisions = 0;
  bool converged = true;
};

// Certified exponential majorant: |f(t)| <= amplitude * exp(-rate * (t - from))
// for all t >= from. Required by integrate_decaying to bound the improper tail.
struct ExpEnvelope {
  double amplitude = 0.0;
  double rate = 0.0;
  double from = 0.0;
};

// Adaptive G7-K15 on a finite interval.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

// Improper integral over [a, inf) for integrands dominated by an exponential
// envelope. With Tail::analytic_bound the horizon is cut where the envelope
// tail drops below tolerance and the bound is folded into the error estimate;
// with Tail::extended_horizon the horizon keeps doubling until the bound is
// negligible.
QuadratureResult integrate_decaying(const std::function<double(double)>& f, double a,
                                    const ExpEnvelope& envelope,
                                    const QuadratureSpec& spec = {});

}  // namespace specdecay
