#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbt {

inline constexpr double kPi = 3.14159265358979323846;

/// Raised when a tensor file fails magic/shape validation.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an optimization run produces a non-finite loss.
struct DivergedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite real-valued discrete-time sequence, one sample per step.
using Signal = std::vector<double>;

/// Deterministic random stream: mt19937_64 with 53-bit uniforms and
/// Box-Muller gaussians. The algorithm is fixed so that seeded streams
/// are stable across runs; do not swap in std::*_distribution, whose
/// output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (pairs cached).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// A T x C x H x W real tensor of video frames, row-major over (t, c, y, x).
/// Values are held in double; the file format stores float32.
struct FrameClip {
  int t = 0;
  int c = 0;
  int h = 0;
  int w = 0;
  std::vector<double> data;

  static FrameClip zeros(int t, int c, int h, int w);

  std::size_t frame_size() const {
    return static_cast<std::size_t>(c) * h * w;
  }
  std::size_t size() const { return static_cast<std::size_t>(t) * frame_size(); }

  std::size_t index(int ti, int ci, int yi, int xi) const {
    return ((static_cast<std::size_t>(ti) * c + ci) * h + yi) * w + xi;
  }
  double& at(int ti, int ci, int yi, int xi) { return data[index(ti, ci, yi, xi)]; }
  double at(int ti, int ci, int yi, int xi) const { return data[index(ti, ci, yi, xi)]; }

  bool same_shape(const FrameClip& o) const {
    return t == o.t && c == o.c && h == o.h && w == o.w;
  }

  void validate() const;
};

enum class SpectrumKind { ComplexGain, Power };

/// Values over an ordered frequency grid in [0, pi]. Power spectra keep the
/// value in the real part; ComplexGain spectra use both components.
struct Spectrum {
  SpectrumKind kind = SpectrumKind::Power;
  std::vector<double> omega;
  std::vector<std::complex<double>> value;

  double power(std::size_t i) const { return value[i].real(); }
};

struct Tone {
  double omega = 0.0;      // radians/sample, in (0, pi]
  double amplitude = 0.0;
  double phase = 0.0;
};

/// Generator recipe: DC level + sinusoidal motion tones + white gaussian noise.
struct SignalDecompositionSpec {
  double dc_level = 0.0;
  std::vector<Tone> tones;
  double noise_std = 0.0;
  int length = 1;

  void validate() const;
};

/// Finite-sequence DTFT: sum_t x[t] e^{-j omega t}.
std::complex<double> dtft(const Signal& x, double omega);

/// Periodogram |X(e^{j omega})|^2 / T at each grid point; grid must lie in [0, pi].
Spectrum empirical_psd(const Signal& x, const std::vector<double>& grid);

/// x[t] = B + sum_k a_k sin(w_k t + phi_k) + noise_std * N(0,1).
/// Same seed gives a bit-identical sequence.
Signal synth_signal(const SignalDecompositionSpec& spec, std::uint64_t seed);

/// Evenly spaced grid of n points covering [0, pi] inclusive.
std::vector<double> make_grid(int n = 512);

/// Trapezoidal integral of y over x.
double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

// --- PBT1 tensor files -----------------------------------------------------
// Layout: magic "PBT1", u32 LE rank, rank x u32 LE dims, row-major f32 LE
// payload. Doubles are rounded to f32 on save.

void save_clip(const FrameClip& clip, const std::filesystem::path& path);
FrameClip load_clip(const std::filesystem::path& path);

void save_signal(const Signal& x, const std::filesystem::path& path);
Signal load_signal(const std::filesystem::path& path);

/// CSV with header "omega,power" (Power) or "omega,re,im" (ComplexGain),
/// 17 significant digits.
void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path);

}  // namespace pbt
