#include "cohmix/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "cohmix/error.hpp"
#include "cohmix/measures.hpp"

namespace cohmix {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(seeded_engine(seed, stream)) {}

SeededRng SeededRng::substream(std::uint64_t index) const {
  return SeededRng(seed_, splitmix64(stream_ ^ splitmix64(index + 1)));
}

double SeededRng::normal() { return normal_(engine_); }

Complex SeededRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

DensityMatrix ginibre_state(int d, int k, SeededRng& rng) {
  if (d < 2) raise(ErrorKind::ParamOutOfRange, "ginibre_state needs d >= 2", d);
  if (k < 1 || k > d) raise(ErrorKind::ParamOutOfRange, "rank parameter must lie in [1, d]", k);
  ComplexMatrix g(d, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < d; ++r) g(r, c) = rng.complex_normal();
  ComplexMatrix rho = hermitian_part(g * g.adjoint());
  rho /= rho.trace().real();
  return DensityMatrix::make(std::move(rho));
}

ComplexMatrix haar_unitary(int d, SeededRng& rng) {
  if (d < 1) raise(ErrorKind::ParamOutOfRange, "haar_unitary needs d >= 1", d);
  ComplexMatrix z(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) z(r, c) = rng.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& packed = qr.matrixQR();
  for (int c = 0; c < d; ++c) {
    const Complex r_diag = packed(c, c);
    const double modulus = std::abs(r_diag);
    if (modulus > 0.0) q.col(c) *= r_diag / modulus;
  }
  return q;
}

DensityMatrix random_fixed_spectrum_state(const RealVector& spectrum, SeededRng& rng) {
  if (spectrum.size() < 1) raise(ErrorKind::BadSpectrum, "empty spectrum");
  if (!spectrum.allFinite() || spectrum.minCoeff() < 0.0) {
    raise(ErrorKind::BadSpectrum, "spectrum entries must be finite and non-negative");
  }
  const double total_error = std::abs(spectrum.sum() - 1.0);
  if (total_error > 1e-12) raise(ErrorKind::BadSpectrum, "spectrum must sum to 1", total_error);
  const int d = static_cast<int>(spectrum.size());
  const ComplexMatrix u = haar_unitary(d, rng);
  return DensityMatrix::make(
      hermitian_part(u * spectrum.cast<Complex>().asDiagonal() * u.adjoint()));
}

ScanPoint scan_point(const DensityMatrix& rho) {
  return {linear_entropy_mixedness(rho), l1_coherence(rho) / (rho.dim() - 1.0)};
}

std::vector<ScanPoint> scan(const ScanOptions& options) {
  if (options.samples < 1) raise(ErrorKind::ParamOutOfRange, "scan needs at least one sample",
                                 static_cast<double>(options.samples));
  const int rank = options.rank == 0 ? options.dim : options.rank;
  const SeededRng base(options.seed);
  std::vector<ScanPoint> points(static_cast<std::size_t>(options.samples));
  const std::int64_t chunks = (options.samples + kScanChunk - 1) / kScanChunk;

  // Validate parameters once on the calling thread so errors propagate.
  {
    SeededRng probe = base.substream(0);
    (void)ginibre_state(options.dim, rank, probe);
  }

  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t c = next++; c < chunks; c = next++) {
      SeededRng rng = base.substream(static_cast<std::uint64_t>(c));
      const std::int64_t begin = c * kScanChunk;
      const std::int64_t end = std::min(options.samples, begin + kScanChunk);
      for (std::int64_t i = begin; i < end; ++i) {
        points[static_cast<std::size_t>(i)] = scan_point(ginibre_state(options.dim, rank, rng));
      }
    }
  };

  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(chunks)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return points;
}

ScanSummary summarize(const std::vector<ScanPoint>& points) {
  ScanSummary s;
  s.count = static_cast<std::int64_t>(points.size());
  s.min_residual = points.empty() ? 0.0 : points.front().residual();
  for (const ScanPoint& p : points) {
    const double r = p.residual();
    s.min_residual = std::min(s.min_residual, r);
    if (r < -kTradeoffTol) ++s.violations;
  }
  return s;
}

std::vector<BinMaximum> binned_maxima(const std::vector<ScanPoint>& points, int bins,
                                      std::int64_t min_count) {
  if (bins < 1) raise(ErrorKind::ParamOutOfRange, "need at least one bin", bins);
  const double width = 1.0 / bins;
  std::vector<BinMaximum> all(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    all[b].lower = b * width;
    all[b].width = width;
    all[b].bound = std::sqrt(1.0 - all[b].lower);
  }
  for (const ScanPoint& p : points) {
    const int b = std::clamp(static_cast<int>(p.mixedness / width), 0, bins - 1);
    ++all[b].count;
    all[b].max_scaled_coherence = std::max(all[b].max_scaled_coherence, p.scaled_coherence);
  }
  std::vector<BinMaximum> kept;
  std::copy_if(all.begin(), all.end(), std::back_inserter(kept),
               [&](const BinMaximum& b) { return b.count >= min_count; });
  return kept;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points) {
  out << "mixedness,scaled_coherence\n";
  for (const ScanPoint& p : points) {
    out << format_number(p.mixedness) << ',' << format_number(p.scaled_coherence) << '\n';
  }
}

std::vector<ScanPoint> read_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "mixedness,scaled_coherence") {
    raise(ErrorKind::ParseError, "missing scan CSV header");
  }
  std::vector<ScanPoint> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) raise(ErrorKind::ParseError, "malformed scan row: " + line);
    try {
      std::size_t used_m = 0;
      std::size_t used_c = 0;
      const std::string m_text = line.substr(0, comma);
      const std::string c_text = line.substr(comma + 1);
      ScanPoint p{std::stod(m_text, &used_m), std::stod(c_text, &used_c)};
      if (used_m != m_text.size() || used_c != c_text.size()) throw std::invalid_argument(line);
      points.push_back(p);
    } catch (const std::logic_error&) {
      raise(ErrorKind::ParseError, "malformed scan row: " + line);
    }
  }
  return points;
}

void write_parabola_csv(std::ostream& out) {
  out << "mixedness,bound\n";
  for (int i = 0; i <= 1000; ++i) {
    const double m = i / 1000.0;
    out << format_number(m) << ',' << format_number(std::sqrt(1.0 - m)) << '\n';
  }
}

}  // namespace cohmix
