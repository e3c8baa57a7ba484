#include "pbt/core.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace pbt {

namespace {

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

FrameClip FrameClip::zeros(int t, int c, int h, int w) {
  if (t < 1 || c < 1 || h < 1 || w < 1) {
    throw std::invalid_argument("FrameClip dims must be strictly positive");
  }
  FrameClip clip;
  clip.t = t;
  clip.c = c;
  clip.h = h;
  clip.w = w;
  clip.data.assign(static_cast<std::size_t>(t) * c * h * w, 0.0);
  return clip;
}

void FrameClip::validate() const {
  if (t < 1 || c < 1 || h < 1 || w < 1) {
    throw std::invalid_argument("FrameClip dims must be strictly positive");
  }
  if (data.size() != size()) {
    throw std::invalid_argument("FrameClip data size does not match dims");
  }
  if (!all_finite(data)) {
    throw std::invalid_argument("FrameClip entries must be finite");
  }
}

void SignalDecompositionSpec::validate() const {
  if (length < 1) throw std::invalid_argument("signal length must be >= 1");
  if (!(noise_std >= 0.0)) throw std::invalid_argument("noise_std must be >= 0");
  if (!std::isfinite(dc_level)) throw std::invalid_argument("dc_level must be finite");
  for (const Tone& tone : tones) {
    if (!(tone.omega > 0.0 && tone.omega <= kPi)) {
      throw std::invalid_argument("tone frequency must lie in (0, pi]");
    }
    if (!std::isfinite(tone.amplitude) || !std::isfinite(tone.phase)) {
      throw std::invalid_argument("tone amplitude/phase must be finite");
    }
  }
}

std::complex<double> dtft(const Signal& x, double omega) {
  if (x.empty()) throw std::invalid_argument("dtft: empty signal");
  if (!std::isfinite(omega)) throw std::invalid_argument("dtft: omega must be finite");
  const std::complex<double> step = std::polar(1.0, -omega);
  std::complex<double> phase(1.0, 0.0);
  std::complex<double> acc(0.0, 0.0);
  for (double sample : x) {
    acc += sample * phase;
    phase *= step;
  }
  return acc;
}

Spectrum empirical_psd(const Signal& x, const std::vector<double>& grid) {
  if (x.size() < 2) throw std::invalid_argument("empirical_psd: need length >= 2");
  Spectrum s;
  s.kind = SpectrumKind::Power;
  s.omega = grid;
  s.value.reserve(grid.size());
  const double t_len = static_cast<double>(x.size());
  for (double w : grid) {
    if (!(w >= 0.0 && w <= kPi)) {
      throw std::invalid_argument("empirical_psd: grid point outside [0, pi]");
    }
    s.value.emplace_back(std::norm(dtft(x, w)) / t_len, 0.0);
  }
  return s;
}

Signal synth_signal(const SignalDecompositionSpec& spec, std::uint64_t seed) {
  spec.validate();
  Signal x(spec.length, spec.dc_level);
  for (const Tone& tone : spec.tones) {
    for (int t = 0; t < spec.length; ++t) {
      x[t] += tone.amplitude * std::sin(tone.omega * t + tone.phase);
    }
  }
  if (spec.noise_std > 0.0) {
    Rng rng(seed);
    for (int t = 0; t < spec.length; ++t) {
      x[t] += spec.noise_std * rng.gaussian();
    }
  }
  return x;
}

std::vector<double> make_grid(int n) {
  if (n < 2) throw std::invalid_argument("make_grid: need at least 2 points");
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) {
    grid[i] = kPi * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return grid;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("trapezoid: need matching arrays of length >= 2");
  }
  double acc = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    acc += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
  }
  return acc;
}

namespace {

constexpr char kMagic[4] = {'P', 'B', 'T', '1'};

void put_u32_le(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {
      static_cast<char>(v & 0xff),
      static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff),
      static_cast<char>((v >> 24) & 0xff),
  };
  out.write(bytes, 4);
}

std::uint32_t get_u32_le(std::istream& in) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), 4);
  if (!in) throw FormatError("tensor file truncated");
  return static_cast<std::uint32_t>(bytes[0]) |
         (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

void save_tensor(const std::filesystem::path& path,
                 const std::vector<std::uint32_t>& dims,
                 const std::vector<double>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open for writing: " + path.string());
  out.write(kMagic, 4);
  put_u32_le(out, static_cast<std::uint32_t>(dims.size()));
  for (std::uint32_t d : dims) put_u32_le(out, d);
  for (double v : data) {
    put_u32_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }
  if (!out) throw FormatError("write failed: " + path.string());
}

std::pair<std::vector<std::uint32_t>, std::vector<double>> load_tensor(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open for reading: " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw FormatError("bad magic in tensor file: " + path.string());
  }
  const std::uint32_t rank = get_u32_le(in);
  if (rank == 0 || rank > 8) throw FormatError("unsupported tensor rank");
  std::vector<std::uint32_t> dims(rank);
  std::size_t count = 1;
  for (std::uint32_t& d : dims) {
    d = get_u32_le(in);
    if (d == 0) throw FormatError("zero tensor dimension");
    count *= d;
  }
  std::vector<double> data(count);
  for (std::size_t i = 0; i < count; ++i) {
    data[i] = std::bit_cast<float>(get_u32_le(in));
  }
  char extra;
  if (in.read(&extra, 1)) throw FormatError("trailing bytes in tensor file");
  return {std::move(dims), std::move(data)};
}

}  // namespace

void save_clip(const FrameClip& clip, const std::filesystem::path& path) {
  clip.validate();
  save_tensor(path,
              {static_cast<std::uint32_t>(clip.t), static_cast<std::uint32_t>(clip.c),
               static_cast<std::uint32_t>(clip.h), static_cast<std::uint32_t>(clip.w)},
              clip.data);
}

FrameClip load_clip(const std::filesystem::path& path) {
  auto [dims, data] = load_tensor(path);
  if (dims.size() != 4) throw FormatError("expected rank-4 tensor for FrameClip");
  FrameClip clip;
  clip.t = static_cast<int>(dims[0]);
  clip.c = static_cast<int>(dims[1]);
  clip.h = static_cast<int>(dims[2]);
  clip.w = static_cast<int>(dims[3]);
  clip.data = std::move(data);
  clip.validate();
  return clip;
}

void save_signal(const Signal& x, const std::filesystem::path& path) {
  if (x.empty()) throw std::invalid_argument("save_signal: empty signal");
  save_tensor(path, {static_cast<std::uint32_t>(x.size())}, x);
}

Signal load_signal(const std::filesystem::path& path) {
  auto [dims, data] = load_tensor(path);
  if (dims.size() != 1) throw FormatError("expected rank-1 tensor for Signal");
  return data;
}

void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path) {
  std::FILE* f = std::fopen(path.string().c_str(), "w");
  if (!f) throw FormatError("cannot open for writing: " + path.string());
  if (s.kind == SpectrumKind::Power) {
    std::fputs("omega,power\n", f);
    for (std::size_t i = 0; i < s.omega.size(); ++i) {
      std::fprintf(f, "%.17g,%.17g\n", s.omega[i], s.value[i].real());
    }
  } else {
    std::fputs("omega,re,im\n", f);
    for (std::size_t i = 0; i < s.omega.size(); ++i) {
      std::fprintf(f, "%.17g,%.17g,%.17g\n", s.omega[i], s.value[i].real(),
                   s.value[i].imag());
    }
  }
  std::fclose(f);
}

}  // namespace pbt
