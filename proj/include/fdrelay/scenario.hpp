#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdrelay/params.hpp"
#include "fdrelay/protocol_kind.hpp"

namespace fdrelay {

/// Configuration problem (bad file, bad flag value). The CLI maps this to
/// exit code 2; runtime failures keep exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "min:max:step", all in dB.
struct GridSpec {
  double min_db = -10.0;
  double max_db = 30.0;
  double step_db = 0.1;

  std::vector<double> edges_db() const;
  std::string to_string() const;
};

/// "min:max:step", rate in bits/s/Hz.
struct RateSweepSpec {
  double min_rate = 0.5;
  double max_rate = 8.0;
  double step = 0.5;

  std::vector<double> rates() const;
  std::string to_string() const;
};

/// One scenario as the CLI sees it: gains in dB, everything else plain.
/// Defaults reproduce the canonical scenario (pi_sd = 10 dB, pi_sr = 20 dB,
/// pi_rr = 10 dB, pi_rd = 20 dB, gamma_th = 5 dB, P = 1, L = 20, D = 2,
/// 10^6 blocks).
struct ScenarioConfig {
  double pi_sd_db = 10.0;
  double pi_sr_db = 20.0;
  double pi_rd_db = 20.0;
  double pi_rr_db = 10.0;
  double relay_power = 1.0;
  std::optional<double> rate;         // bits/s/Hz; mutually exclusive with gamma_th_db
  std::optional<double> gamma_th_db;  // defaults to 5 dB when neither is given
  int block_len = 20;
  int delay = 2;
  std::uint64_t n_blocks = 1000000;
  std::uint64_t seed = 1;
  int n_workers = 0;  // 0 = one per hardware thread
  std::vector<ProtocolKind> protocols = {ProtocolKind::kDt, ProtocolKind::kSdf,
                                         ProtocolKind::kIsdf};
  GridSpec grid;
  std::optional<RateSweepSpec> rate_sweep;
  std::string out_path = "fdrelay_out";

  /// dB -> linear, rate/threshold resolution, validation. Throws ConfigError.
  SystemParams resolve_params() const;
  int resolve_workers() const;
};

/// Reads a flat "key = value" file ('#' comments, blank lines allowed) into
/// cfg. Unknown keys, bad values, and malformed lines raise ConfigError with
/// the offending line number.
void load_config_file(ScenarioConfig& cfg, const std::string& path);

/// Applies one key=value pair (the config-file vocabulary). Throws ConfigError.
void apply_config_entry(ScenarioConfig& cfg, const std::string& key, const std::string& value);

std::vector<ProtocolKind> parse_protocol_list(const std::string& csv);
GridSpec parse_grid_spec(const std::string& text);
RateSweepSpec parse_rates_spec(const std::string& text);
std::string protocol_list_to_string(const std::vector<ProtocolKind>& protocols);

}  // namespace fdrelay
