#include "fdrelay/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace fdrelay {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v))
      throw ConfigError("invalid number for " + what + ": '" + text + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for " + what + ": '" + text + "'");
  }
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ConfigError("invalid unsigned integer for " + what + ": '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ConfigError("invalid integer for " + what + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

struct TripleSpec {
  double lo, hi, step;
};

TripleSpec parse_triple(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError(what + " must be min:max:step, got '" + text + "'");
  TripleSpec t{parse_double(parts[0], what), parse_double(parts[1], what),
               parse_double(parts[2], what)};
  if (!(t.step > 0.0)) throw ConfigError(what + ": step must be > 0");
  if (t.hi < t.lo) throw ConfigError(what + ": max must be >= min");
  return t;
}

std::vector<double> expand_triple(const TripleSpec& t) {
  std::vector<double> out;
  const int n = static_cast<int>(std::floor((t.hi - t.lo) / t.step + 1e-9)) + 1;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(t.lo + k * t.step);
  return out;
}

std::string format_triple(double lo, double hi, double step) {
  std::ostringstream os;
  os << lo << ':' << hi << ':' << step;
  return os.str();
}

}  // namespace

std::vector<double> GridSpec::edges_db() const { return expand_triple({min_db, max_db, step_db}); }

std::string GridSpec::to_string() const { return format_triple(min_db, max_db, step_db); }

std::vector<double> RateSweepSpec::rates() const { return expand_triple({min_rate, max_rate, step}); }

std::string RateSweepSpec::to_string() const { return format_triple(min_rate, max_rate, step); }

SystemParams ScenarioConfig::resolve_params() const {
  if (rate && gamma_th_db) throw ConfigError("rate and gamma_th_db are mutually exclusive");
  try {
    const double gamma_th = db_to_linear(gamma_th_db.value_or(5.0));
    SystemParams p =
        SystemParams::from_db(pi_sd_db, pi_sr_db, pi_rd_db, pi_rr_db, relay_power,
                              /*rate=*/1.0, block_len, delay);
    return rate ? p.with_rate(*rate) : p.with_gamma_th(gamma_th);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int ScenarioConfig::resolve_workers() const {
  if (n_workers > 0) return n_workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<ProtocolKind> parse_protocol_list(const std::string& csv) {
  std::vector<ProtocolKind> kinds;
  for (const auto& name : split(csv, ',')) {
    const auto kind = parse_protocol(name);
    if (!kind) throw ConfigError("unknown protocol '" + name + "' (expected dt|sdf|isdf|nsfdr)");
    kinds.push_back(*kind);
  }
  if (kinds.empty()) throw ConfigError("protocol list is empty");
  return kinds;
}

std::string protocol_list_to_string(const std::vector<ProtocolKind>& protocols) {
  std::string out;
  for (const auto& p : protocols) {
    if (!out.empty()) out += ',';
    out += to_string(p);
  }
  return out;
}

GridSpec parse_grid_spec(const std::string& text) {
  const TripleSpec t = parse_triple(text, "grid");
  return GridSpec{t.lo, t.hi, t.step};
}

RateSweepSpec parse_rates_spec(const std::string& text) {
  const TripleSpec t = parse_triple(text, "rates");
  if (!(t.lo > 0.0)) throw ConfigError("rates: rates must be > 0");
  return RateSweepSpec{t.lo, t.hi, t.step};
}

void apply_config_entry(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "pi_sd_db")
    cfg.pi_sd_db = parse_double(value, key);
  else if (key == "pi_sr_db")
    cfg.pi_sr_db = parse_double(value, key);
  else if (key == "pi_rd_db")
    cfg.pi_rd_db = parse_double(value, key);
  else if (key == "pi_rr_db")
    cfg.pi_rr_db = parse_double(value, key);
  else if (key == "relay_power")
    cfg.relay_power = parse_double(value, key);
  else if (key == "rate") {
    cfg.rate = parse_double(value, key);
    cfg.gamma_th_db.reset();
  } else if (key == "gamma_th_db") {
    cfg.gamma_th_db = parse_double(value, key);
    cfg.rate.reset();
  } else if (key == "block_len")
    cfg.block_len = parse_int(value, key);
  else if (key == "delay")
    cfg.delay = parse_int(value, key);
  else if (key == "blocks")
    cfg.n_blocks = parse_u64(value, key);
  else if (key == "seed")
    cfg.seed = parse_u64(value, key);
  else if (key == "workers")
    cfg.n_workers = parse_int(value, key);
  else if (key == "protocols")
    cfg.protocols = parse_protocol_list(value);
  else if (key == "grid")
    cfg.grid = parse_grid_spec(value);
  else if (key == "rates")
    cfg.rate_sweep = parse_rates_spec(value);
  else if (key == "out")
    cfg.out_path = value;
  else
    throw ConfigError("unknown key '" + key + "'");
}

void load_config_file(ScenarioConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    try {
      apply_config_entry(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace fdrelay
