#pragma once

#include <complex>
#include <optional>
#include <span>

#include "pbt/core.hpp"

namespace pbt {

double logistic(double x);

/// Two-tap time-varying pre-filter coefficients:
///   lambda[t] = mu + A sin(omega t + phi)
/// with mu = logistic(mu_raw) in (0,1) and omega = pi * logistic(sigma_raw)
/// in (0, pi). Only the two raw scalars are learnable; A and phi are fixed
/// hyperparameters. lambda[t] itself is not clamped.
struct PboParams {
  double mu_raw = 0.0;
  double sigma_raw = 0.0;
  double amplitude = 0.1;  // A
  double phase = 0.0;      // phi

  double mu() const { return logistic(mu_raw); }
  double p() const { return logistic(sigma_raw); }
  double omega() const { return kPi * p(); }

  void validate() const;
};

struct OmegaMap {
  double p = 0.0;
  double omega = 0.0;
};

/// p = logistic(sigma_raw), omega = pi * p.
OmegaMap omega_from_raw(double sigma_raw);

/// Default initialization for a clip of length T: mu = 0.5, one schedule
/// period across the clip (omega = 2 pi / (T-1)), A = 0.1, phi = 0.
/// Requires T >= 4 so the logistic inversion stays inside (0,1).
PboParams init_params(int t_len);

double lambda_schedule(const PboParams& p, int t);

std::vector<double> lambda_sequence(const PboParams& p, int t_len);

/// How X[-1] is defined at the clip boundary.
enum class Boundary {
  ReplicateFirst,  // X[-1] := X[0], so Y[0] = (1 - lambda[0]) X[0]
  ZeroPad,         // X[-1] := 0,    so Y[0] = X[0]
};

/// Y[t] = X[t] - lambda[t] X[t-1]; lambdas must have length T.
Signal prefilter_apply(const Signal& x, std::span<const double> lambdas,
                       Boundary boundary = Boundary::ReplicateFirst);
FrameClip prefilter_apply(const FrameClip& x, std::span<const double> lambdas,
                          Boundary boundary = Boundary::ReplicateFirst);

/// |W(e^{j omega}, lambda)|^2 = 1 + lambda^2 - 2 lambda cos omega.
double prefilter_gain_sq(double lambda, double omega);

/// |G|^2 = |W|^2 (1-alpha)^2 / (1 + alpha^2 - 2 alpha cos omega).
double cascade_gain_sq(double lambda, double alpha, double omega);

/// Monotone slope direction of the constant-lambda cascade over [0, pi].
enum class TiltClass { LowPassTilt, Flat, HighPassTilt };

const char* to_string(TiltClass tilt);

/// LowPassTilt if lambda < alpha, Flat if |lambda - alpha| <= 1e-12,
/// HighPassTilt if lambda > alpha.
TiltClass tilt_classify(double lambda, double alpha);

/// Unique -3 dB cutoff of the constant-lambda cascade, normalized at the
/// peak endpoint (omega = 0 for low-pass tilt, omega = pi for high-pass).
/// Returns nullopt when the half-power level is not attained inside [0, pi].
/// Throws on the flat case.
std::optional<double> cutoff_3db(double lambda, double alpha);

/// Harmonic-transfer description of the single-tone schedule, with Fourier
/// coefficients under the convention lambda[t] = sum_m c_m e^{+j m omega0 t}:
///   c_0 = mu, c_{+1} = A e^{j phi} / (2j), c_{-1} = conj(c_{+1}).
/// The sideband transfers carry the shift phase e^{+j m omega0} that the
/// exact derivation produces; magnitudes are |W_{+-1}|^2 = A^2/4.
struct HarmonicCoefficients {
  std::complex<double> lambda0;
  std::complex<double> lambda_plus;   // c_{+1}
  std::complex<double> lambda_minus;  // c_{-1}
  double omega0 = 0.0;

  std::complex<double> w0(double omega) const;       // 1 - mu e^{-j omega}
  std::complex<double> w_plus(double omega) const;   // -c_{+1} e^{-j(omega - omega0)}
  std::complex<double> w_minus(double omega) const;  // -c_{-1} e^{-j(omega + omega0)}
  std::complex<double> w(int m, double omega) const;
};

HarmonicCoefficients harmonic_coefficients(const PboParams& p);

/// Time-averaged squared gain of the schedule-driven filter:
///   (1 + mu^2 - 2 mu cos omega) + A^2 / 2.
double avg_squared_gain(double mu, double amplitude, double omega);

}  // namespace pbt
