#include "fdrelay/commands.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "fdrelay/analytic.hpp"
#include "fdrelay/simulate.hpp"

namespace fdrelay {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
  return out;
}

void echo_config(std::ofstream& out, const ScenarioConfig& cfg, const SystemParams& params) {
  out << "pi_sd_db = " << num(cfg.pi_sd_db) << "\n";
  out << "pi_sr_db = " << num(cfg.pi_sr_db) << "\n";
  out << "pi_rd_db = " << num(cfg.pi_rd_db) << "\n";
  out << "pi_rr_db = " << num(cfg.pi_rr_db) << "\n";
  out << "relay_power = " << num(cfg.relay_power) << "\n";
  out << "rate = " << num(params.rate) << "\n";
  out << "gamma_th_db = " << num(linear_to_db(params.gamma_th)) << "\n";
  out << "block_len = " << cfg.block_len << "\n";
  out << "delay = " << cfg.delay << "\n";
  out << "blocks = " << cfg.n_blocks << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "workers = " << cfg.resolve_workers() << "\n";
  out << "protocols = " << protocol_list_to_string(cfg.protocols) << "\n";
  out << "grid = " << cfg.grid.to_string() << "\n";
  if (cfg.rate_sweep) out << "rates = " << cfg.rate_sweep->to_string() << "\n";
  out << "out = " << cfg.out_path << "\n";
}

}  // namespace

std::string cmd_analytic(const ScenarioConfig& cfg) {
  const SystemParams params = cfg.resolve_params();
  const std::string path = cfg.out_path + "_analytic.csv";
  auto out = open_out(path);
  out << "gamma_db,cdf_dt,cdf_sdf,cdf_isdf,pdf_sdf,pdf_isdf\n";
  for (double gdb : cfg.grid.edges_db()) {
    const double g = db_to_linear(gdb);
    out << num(gdb) << ',' << num(cdf_dt(g, params)) << ',' << num(cdf_sdf(g, params)) << ','
        << num(cdf_isdf(g, params)) << ',' << num(pdf_sdf(g, params)) << ','
        << num(pdf_isdf(g, params)) << "\n";
  }
  return path;
}

std::vector<std::string> cmd_simulate(const ScenarioConfig& cfg) {
  const SystemParams params = cfg.resolve_params();
  const int workers = cfg.resolve_workers();

  std::vector<std::string> written;
  std::vector<SimulationReport> reports;
  reports.reserve(cfg.protocols.size());
  for (ProtocolKind kind : cfg.protocols)
    reports.push_back(simulate(kind, params, cfg.n_blocks, cfg.seed, workers));

  for (const auto& rep : reports) {
    const std::string path =
        cfg.out_path + "_" + std::string(to_string(rep.protocol)) + "_ecdf.csv";
    auto out = open_out(path);
    out << "gamma_db,ecdf\n";
    for (int k = 0; k <= rep.ecdf.n_bins; ++k)
      out << num(rep.ecdf.edge_db(k)) << ',' << num(rep.ecdf.cdf_at_edge(k)) << "\n";
    written.push_back(path);
  }

  const std::string summary_path = cfg.out_path + "_summary.txt";
  auto out = open_out(summary_path);
  echo_config(out, cfg, params);
  for (const auto& rep : reports) {
    const std::string p(to_string(rep.protocol));
    out << p << ".mean_eff_snr = " << num(rep.mean_eff_snr) << "\n";
    out << p << ".mean_eff_snr_se = " << num(rep.mean_eff_snr_se) << "\n";
    out << p << ".outage_rate = " << num(rep.outage_rate) << "\n";
    out << p << ".outage_rate_se = " << num(rep.outage_rate_se) << "\n";
    out << p << ".outage_count = " << rep.outage_count << "\n";
    out << p << ".relay_active_fraction = " << num(rep.relay_active_fraction) << "\n";
    out << p << ".relay_active_count = " << rep.relay_active_count << "\n";
    if (rep.sup_distance_vs_analytic)
      out << p << ".sup_distance = " << num(*rep.sup_distance_vs_analytic) << "\n";
  }
  written.push_back(summary_path);
  return written;
}

std::string cmd_sweep(const ScenarioConfig& cfg) {
  if (!cfg.rate_sweep) throw ConfigError("sweep requires a rates spec (rates = min:max:step)");
  const SystemParams base = cfg.resolve_params();
  const int workers = cfg.resolve_workers();
  const std::vector<double> rates = cfg.rate_sweep->rates();

  const auto sdf = sweep_rate(ProtocolKind::kSdf, base, rates, cfg.n_blocks, cfg.seed, workers);
  const auto isdf = sweep_rate(ProtocolKind::kIsdf, base, rates, cfg.n_blocks, cfg.seed, workers);

  const std::string path = cfg.out_path + "_sweep.csv";
  auto out = open_out(path);
  out << "rate_bits,avg_snr_sim_sdf,avg_snr_ana_sdf,avg_snr_sim_isdf,avg_snr_ana_isdf,"
         "coop_pct_sim_sdf,coop_pct_ana_sdf,coop_pct_sim_isdf,coop_pct_ana_isdf\n";
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const SystemParams p = base.with_rate(rates[i]);
    out << num(rates[i]) << ',' << num(sdf[i].mean_eff_snr) << ','
        << num(avg_snr(ProtocolKind::kSdf, p)) << ',' << num(isdf[i].mean_eff_snr) << ','
        << num(avg_snr(ProtocolKind::kIsdf, p)) << ','
        << num(100.0 * sdf[i].relay_active_fraction) << ','
        << num(100.0 * cooperation_fraction(ProtocolKind::kSdf, p)) << ','
        << num(100.0 * isdf[i].relay_active_fraction) << ','
        << num(100.0 * cooperation_fraction(ProtocolKind::kIsdf, p)) << "\n";
  }
  return path;
}

}  // namespace fdrelay
