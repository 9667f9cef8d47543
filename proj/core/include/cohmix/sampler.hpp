#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string_view>
#include <vector>

#include "cohmix/state.hpp"

namespace cohmix {

/// Deterministic generator: mt19937_64 seeded from (seed, stream) through
/// std::seed_seq. Substreams are independent of scheduling, so any work split
/// over substreams reproduces bit-for-bit.
class SeededRng {
public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/seed_seq";

  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  /// Fresh generator for substream `index` of this seed.
  SeededRng substream(std::uint64_t index) const;

  double normal();
  Complex complex_normal();  // real and imaginary parts each N(0, 1)
  std::mt19937_64& engine() noexcept { return engine_; }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// G G^dagger / Tr(G G^dagger) with G a d x k complex Gaussian matrix; k = d
/// is the Hilbert-Schmidt ensemble. Throws ParamOutOfRange unless d >= 2 and
/// 1 <= k <= d.
DensityMatrix ginibre_state(int d, int k, SeededRng& rng);

/// Haar unitary from the QR decomposition of a complex Ginibre matrix with
/// the phases of R's diagonal moved into Q.
ComplexMatrix haar_unitary(int d, SeededRng& rng);

/// U diag(spectrum) U^dagger with Haar U. Throws BadSpectrum unless entries
/// are non-negative and sum to 1 within 1e-12.
DensityMatrix random_fixed_spectrum_state(const RealVector& spectrum, SeededRng& rng);

struct ScanPoint {
  double mixedness = 0.0;
  double scaled_coherence = 0.0;  // C_l1 / (d - 1)

  /// 1 - scaled_coherence^2 - mixedness.
  double residual() const { return 1.0 - scaled_coherence * scaled_coherence - mixedness; }
};

ScanPoint scan_point(const DensityMatrix& rho);

struct ScanOptions {
  int dim = 2;
  std::int64_t samples = 1;
  int rank = 0;  // 0 means rank = dim
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Samples per chunk; chunk c draws from substream c of the seed.
inline constexpr std::int64_t kScanChunk = 4096;

/// `samples` random states mapped to the coherence-mixedness plane. The
/// returned order depends only on the seed, never on `threads`.
std::vector<ScanPoint> scan(const ScanOptions& options);

struct ScanSummary {
  std::int64_t count = 0;
  std::int64_t violations = 0;   // residual < -1e-9
  double min_residual = 0.0;     // most negative 1 - C^2 - M seen
};

inline constexpr double kTradeoffTol = 1e-9;

ScanSummary summarize(const std::vector<ScanPoint>& points);

struct BinMaximum {
  double lower = 0.0;  // bin is [lower, lower + width)
  double width = 0.0;
  std::int64_t count = 0;
  double max_scaled_coherence = 0.0;
  double bound = 0.0;  // sqrt(1 - lower)
};

/// Maximum scaled coherence per mixedness bin over [0, 1]; bins holding fewer
/// than `min_count` samples are dropped.
std::vector<BinMaximum> binned_maxima(const std::vector<ScanPoint>& points,
                                      int bins = 50, std::int64_t min_count = 20);

/// CSV with header `mixedness,scaled_coherence`, 12 significant digits.
void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points);
std::vector<ScanPoint> read_scan_csv(std::istream& in);

/// Reference curve `mixedness,bound` with bound = sqrt(1 - m) on a 0.001 grid.
void write_parabola_csv(std::ostream& out);

}  // namespace cohmix
