#include "pbt/lif.hpp"

#include <cmath>
#include <limits>

namespace pbt {

LifParams LifParams::subthreshold(double tau, double v_reset) {
  LifParams p;
  p.tau = tau;
  p.v_th = std::numeric_limits<double>::infinity();
  p.v_reset = v_reset;
  return p;
}

void LifParams::validate() const {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw std::invalid_argument("LifParams: tau must lie in (0,1)");
  }
  if (!(v_th > v_reset)) {
    throw std::invalid_argument("LifParams: v_th must exceed v_reset");
  }
}

LifStepResult lif_step(const LifState& state, double x, const LifParams& p) {
  LifStepResult r;
  r.u = state.v + p.tau * (x - (state.v - p.v_reset));
  r.spike = (r.u >= p.v_th) ? 1 : 0;
  r.state.v = r.spike ? p.v_reset : r.u;
  return r;
}

LifRun lif_run(const Signal& x, const LifParams& p, LifState initial) {
  if (x.empty()) throw std::invalid_argument("lif_run: empty signal");
  p.validate();
  LifRun out;
  out.spikes.reserve(x.size());
  out.potentials.reserve(x.size());
  LifState state = initial;
  for (double sample : x) {
    const LifStepResult r = lif_step(state, sample, p);
    state = r.state;
    out.spikes.push_back(static_cast<double>(r.spike));
    out.potentials.push_back(state.v);
  }
  return out;
}

std::complex<double> lif_subthreshold_gain(double alpha, double omega) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0,1)");
  }
  const std::complex<double> den = 1.0 - alpha * std::polar(1.0, -omega);
  return (1.0 - alpha) / den;
}

double lif_gain_sq(double alpha, double omega) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in [0,1)");
  }
  const double num = (1.0 - alpha) * (1.0 - alpha);
  const double den = 1.0 + alpha * alpha - 2.0 * alpha * std::cos(omega);
  return num / den;
}

double motion_attenuation_bound(double alpha, double omega0) {
  if (!(omega0 > 0.0 && omega0 <= kPi)) {
    throw std::invalid_argument("omega0 must lie in (0, pi]");
  }
  return lif_gain_sq(alpha, omega0);
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

SurrogateSpike surrogate_spike(double u, double v_th, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("surrogate sharpness k must be > 0");
  SurrogateSpike s;
  s.spike = (u >= v_th) ? 1 : 0;
  s.pseudo_derivative = surrogate_grad(u, v_th, k);
  return s;
}

double surrogate_grad(double u, double v_th, double k) {
  const double s = sigmoid(k * (u - v_th));
  return k * s * (1.0 - s);
}

}  // namespace pbt
