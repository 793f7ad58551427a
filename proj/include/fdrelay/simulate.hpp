#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fdrelay/analytic.hpp"
#include "fdrelay/params.hpp"
#include "fdrelay/protocol.hpp"

namespace fdrelay {

/// Fixed-width histogram of effective SNR in dB, with underflow/overflow
/// bins. Bin k covers [min_db + k*step_db, min_db + (k+1)*step_db); the
/// cumulative count at a bin edge is the exact empirical CDF there.
struct EmpiricalDistribution {
  double min_db = -40.0;
  double step_db = 0.1;
  int n_bins = 900;
  std::vector<std::uint64_t> counts;  // size n_bins
  std::uint64_t underflow = 0;        // includes effective_snr == 0
  std::uint64_t overflow = 0;
  std::uint64_t n_total = 0;

  /// The standard -40..+50 dB, 0.1 dB grid used by the simulator.
  static EmpiricalDistribution standard();

  void add(double snr_linear);

  /// Element-wise count addition; geometries must match exactly.
  void merge(const EmpiricalDistribution& other);

  /// Edge k for k in [0, n_bins], in dB.
  double edge_db(int k) const { return min_db + k * step_db; }

  /// Empirical P{ X < edge_k }.
  double cdf_at_edge(int k) const;

  bool same_geometry(const EmpiricalDistribution& other) const;
};

/// Aggregated statistics of one Monte Carlo run.
struct SimulationReport {
  SystemParams params;
  ProtocolKind protocol = ProtocolKind::kDt;
  std::uint64_t n_blocks = 0;
  std::uint64_t seed = 0;
  int n_workers = 1;
  EmpiricalDistribution ecdf;
  double mean_eff_snr = 0.0;
  double mean_eff_snr_se = 0.0;  // sample-variance standard error
  double outage_rate = 0.0;
  double outage_rate_se = 0.0;  // binomial standard error
  std::uint64_t outage_count = 0;
  std::uint64_t relay_active_count = 0;
  double relay_active_fraction = 0.0;
  /// Sup distance between the empirical CDF and the matching closed form
  /// (F_sd for DT, the SDF/ISDF end-to-end forms otherwise); absent for
  /// non-selective FDR, which has no analytic curve.
  std::optional<double> sup_distance_vs_analytic;
};

/// Number of independent counter-based substreams a run is sharded into.
/// Fixed, so results are bit-identical for any worker count.
inline constexpr int kShardCount = 256;

/// Runs n_blocks independent fading blocks under one policy. Blocks are
/// sharded over kShardCount substreams (stream_id = stream_base + shard) and
/// shard accumulators are merged in shard order, so the report depends only
/// on (seed, stream_base, n_blocks) -- not on n_workers. Two protocols run
/// with the same seed see the identical block sequence.
///
/// Throws std::invalid_argument on n_blocks == 0, n_workers < 1, or when
/// n_blocks * block_len overflows the 64-bit symbol accumulator.
SimulationReport simulate(ProtocolKind kind, const SystemParams& params, std::uint64_t n_blocks,
                          std::uint64_t seed, int n_workers, std::uint64_t stream_base = 0);

/// One simulate() per rate on a shared parameter base; rate index i uses
/// fresh substreams [i*kShardCount, (i+1)*kShardCount).
std::vector<SimulationReport> sweep_rate(ProtocolKind kind, const SystemParams& params,
                                         std::span<const double> rates, std::uint64_t n_blocks,
                                         std::uint64_t seed, int n_workers);

/// max_k | empirical CDF(edge_k) - curve(edge_k) | over the histogram's bin
/// edges. The curve must be a CDF and its grid must contain every edge
/// (linear SNR, matched to 1e-9 relative); otherwise std::invalid_argument.
double sup_distance(const EmpiricalDistribution& emp, const AnalyticCurve& curve);

/// The histogram bin edges of `emp` converted to linear SNR -- the natural
/// grid for building a comparison curve.
std::vector<double> edges_linear(const EmpiricalDistribution& emp);

}  // namespace fdrelay
