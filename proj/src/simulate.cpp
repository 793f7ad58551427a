#include "fdrelay/simulate.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace fdrelay {

EmpiricalDistribution EmpiricalDistribution::standard() {
  EmpiricalDistribution h;
  h.counts.assign(static_cast<std::size_t>(h.n_bins), 0);
  return h;
}

void EmpiricalDistribution::add(double snr_linear) {
  ++n_total;
  const double db = 10.0 * std::log10(snr_linear);  // snr 0 -> -inf -> underflow
  if (!(db >= min_db)) {
    ++underflow;
    return;
  }
  const double pos = (db - min_db) / step_db;
  if (pos >= static_cast<double>(n_bins)) {
    ++overflow;
    return;
  }
  ++counts[static_cast<std::size_t>(pos)];
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
  if (!same_geometry(other))
    throw std::invalid_argument("EmpiricalDistribution::merge: geometry mismatch");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  underflow += other.underflow;
  overflow += other.overflow;
  n_total += other.n_total;
}

double EmpiricalDistribution::cdf_at_edge(int k) const {
  std::uint64_t below = underflow;
  for (int i = 0; i < k; ++i) below += counts[static_cast<std::size_t>(i)];
  return n_total == 0 ? 0.0 : static_cast<double>(below) / static_cast<double>(n_total);
}

bool EmpiricalDistribution::same_geometry(const EmpiricalDistribution& other) const {
  return min_db == other.min_db && step_db == other.step_db && n_bins == other.n_bins &&
         counts.size() == other.counts.size();
}

std::vector<double> edges_linear(const EmpiricalDistribution& emp) {
  std::vector<double> edges;
  edges.reserve(static_cast<std::size_t>(emp.n_bins) + 1);
  for (int k = 0; k <= emp.n_bins; ++k) edges.push_back(db_to_linear(emp.edge_db(k)));
  return edges;
}

double sup_distance(const EmpiricalDistribution& emp, const AnalyticCurve& curve) {
  if (curve.kind != CurveKind::kCdf)
    throw std::invalid_argument("sup_distance: curve must be a CDF");

  // Walk the curve grid and the histogram edges together; every edge must be
  // present in the grid (to 1e-9 relative) or the grids do not match.
  double worst = 0.0;
  std::uint64_t below = emp.underflow;
  std::size_t j = 0;
  for (int k = 0; k <= emp.n_bins; ++k) {
    const double edge = db_to_linear(emp.edge_db(k));
    const double tol = 1e-9 * std::max(1.0, std::abs(edge));
    while (j < curve.grid.size() && curve.grid[j] < edge - tol) ++j;
    if (j >= curve.grid.size() || std::abs(curve.grid[j] - edge) > tol)
      throw std::invalid_argument("sup_distance: grid mismatch at histogram edge");
    const double ecdf =
        emp.n_total == 0 ? 0.0 : static_cast<double>(below) / static_cast<double>(emp.n_total);
    worst = std::max(worst, std::abs(ecdf - curve.values[j]));
    if (k < emp.n_bins) below += emp.counts[static_cast<std::size_t>(k)];
  }
  return worst;
}

namespace {

struct ShardAccum {
  EmpiricalDistribution hist = EmpiricalDistribution::standard();
  double sum = 0.0;
  double sumsq = 0.0;
  std::uint64_t outage = 0;
  std::uint64_t active = 0;
};

void run_shard(ProtocolKind kind, const SystemParams& params, std::uint64_t n_blocks,
               std::uint64_t seed, std::uint64_t stream_id, ShardAccum& acc) {
  RngStream rng(seed, stream_id);
  for (std::uint64_t i = 0; i < n_blocks; ++i) {
    const ChannelBlock block = sample_block(params, rng);
    const BlockOutcome out = run_block(kind, block, params);
    acc.hist.add(out.effective_snr);
    acc.sum += out.effective_snr;
    acc.sumsq += out.effective_snr * out.effective_snr;
    acc.outage += out.in_outage ? 1 : 0;
    acc.active += out.relay_active ? 1 : 0;
  }
}

}  // namespace

SimulationReport simulate(ProtocolKind kind, const SystemParams& params, std::uint64_t n_blocks,
                          std::uint64_t seed, int n_workers, std::uint64_t stream_base) {
  params.validate();
  if (n_blocks == 0) throw std::invalid_argument("simulate: n_blocks must be >= 1");
  if (n_workers < 1) throw std::invalid_argument("simulate: n_workers must be >= 1");
  if (n_blocks > std::numeric_limits<std::uint64_t>::max() /
                     static_cast<std::uint64_t>(params.block_len))
    throw std::invalid_argument("simulate: n_blocks * block_len overflows the accumulator");

  // Fixed shard layout: shard s simulates base + (s < rem) blocks from its own
  // substream. Workers race over shards, but accumulation happens per shard
  // and the merge below walks shards in index order, so the report is
  // bit-identical for every worker count.
  const std::uint64_t base = n_blocks / kShardCount;
  const std::uint64_t rem = n_blocks % kShardCount;
  auto shard_blocks = [&](int s) {
    return base + (static_cast<std::uint64_t>(s) < rem ? 1 : 0);
  };

  std::vector<ShardAccum> accums(kShardCount);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int s = next.fetch_add(1); s < kShardCount; s = next.fetch_add(1)) {
      const std::uint64_t n = shard_blocks(s);
      if (n > 0) run_shard(kind, params, n, seed, stream_base + static_cast<std::uint64_t>(s),
                           accums[static_cast<std::size_t>(s)]);
    }
  };

  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SimulationReport rep;
  rep.params = params;
  rep.protocol = kind;
  rep.n_blocks = n_blocks;
  rep.seed = seed;
  rep.n_workers = n_workers;
  rep.ecdf = EmpiricalDistribution::standard();
  double sum = 0.0, sumsq = 0.0;
  for (int s = 0; s < kShardCount; ++s) {
    const auto& acc = accums[static_cast<std::size_t>(s)];
    rep.ecdf.merge(acc.hist);
    sum += acc.sum;
    sumsq += acc.sumsq;
    rep.outage_count += acc.outage;
    rep.relay_active_count += acc.active;
  }

  const double n = static_cast<double>(n_blocks);
  rep.mean_eff_snr = sum / n;
  if (n_blocks > 1) {
    const double var = std::max(0.0, (sumsq - n * rep.mean_eff_snr * rep.mean_eff_snr) / (n - 1.0));
    rep.mean_eff_snr_se = std::sqrt(var / n);
  }
  rep.outage_rate = static_cast<double>(rep.outage_count) / n;
  rep.outage_rate_se = std::sqrt(rep.outage_rate * (1.0 - rep.outage_rate) / n);
  rep.relay_active_fraction = static_cast<double>(rep.relay_active_count) / n;

  if (kind != ProtocolKind::kNonSelectiveFdr) {
    const auto curve = make_curve(kind, CurveKind::kCdf, edges_linear(rep.ecdf), params);
    rep.sup_distance_vs_analytic = sup_distance(rep.ecdf, curve);
  }
  return rep;
}

std::vector<SimulationReport> sweep_rate(ProtocolKind kind, const SystemParams& params,
                                         std::span<const double> rates, std::uint64_t n_blocks,
                                         std::uint64_t seed, int n_workers) {
  if (rates.empty()) throw std::invalid_argument("sweep_rate: rates must be non-empty");
  std::vector<SimulationReport> reports;
  reports.reserve(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const SystemParams p = params.with_rate(rates[i]);
    reports.push_back(simulate(kind, p, n_blocks, seed, n_workers,
                               static_cast<std::uint64_t>(i) * kShardCount));
  }
  return reports;
}

}  // namespace fdrelay
