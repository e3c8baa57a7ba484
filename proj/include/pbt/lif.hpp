#pragma once

#include <complex>

#include "pbt/core.hpp"

namespace pbt {

/// Discrete-time LIF neuron parameters. The update is
///   u[t] = v[t-1] + tau * (x[t] - (v[t-1] - v_reset))
///   s[t] = Theta(u[t] - v_th),  v[t] = u[t] * (1 - s[t]) + v_reset * s[t]
/// with Theta(0) = 1 (fire on exact threshold). alpha = 1 - tau is the
/// geometric memory factor of the subthreshold recursion.
///
/// v_th = +inf disables firing entirely, so the recursion is exactly the
/// first-order linear system the frequency analysis describes. Note that at
/// finite v_th, float rounding can reach the threshold in finitely many
/// steps even when exact arithmetic only approaches it.
struct LifParams {
  double tau = 0.7;
  double v_th = 1.0;
  double v_reset = 0.0;

  double alpha() const { return 1.0 - tau; }

  /// Analysis mode: firing disabled (v_th = +inf).
  static LifParams subthreshold(double tau, double v_reset = 0.0);

  void validate() const;
};

struct LifState {
  double v = 0.0;
};

struct LifStepResult {
  LifState state;
  int spike = 0;
  double u = 0.0;  // pre-spike membrane potential
};

LifStepResult lif_step(const LifState& state, double x, const LifParams& p);

struct LifRun {
  Signal spikes;      // {0,1}-valued
  Signal potentials;  // post-reset membrane trace
};

LifRun lif_run(const Signal& x, const LifParams& p, LifState initial = {});

/// H_LIF(e^{j omega}) = (1 - alpha) / (1 - alpha e^{-j omega}).
std::complex<double> lif_subthreshold_gain(double alpha, double omega);

/// |H_LIF|^2 = (1 - alpha)^2 / (1 + alpha^2 - 2 alpha cos omega).
double lif_gain_sq(double alpha, double omega);

/// epsilon(alpha, omega0) = max over [omega0, pi] of |H_LIF|^2, which by
/// monotone decrease equals |H_LIF(e^{j omega0})|^2.
double motion_attenuation_bound(double alpha, double omega0);

struct SurrogateSpike {
  int spike = 0;
  double pseudo_derivative = 0.0;
};

/// Forward Heaviside spike with a sigmoid pseudo-derivative of sharpness k,
/// used only on the backward pass.
SurrogateSpike surrogate_spike(double u, double v_th, double k);

/// k * sigma(k(u - v_th)) * (1 - sigma(k(u - v_th))).
double surrogate_grad(double u, double v_th, double k);

double sigmoid(double x);

}  // namespace pbt
