#include "fdrelay/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fdrelay {

double db_to_linear(double x_db) {
  if (!std::isfinite(x_db)) throw std::invalid_argument("db_to_linear: non-finite input");
  return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::invalid_argument("linear_to_db: input must be positive and finite");
  return 10.0 * std::log10(x);
}

namespace {

double gamma_th_from_rate(double rate) { return std::expm1(rate * std::numbers::ln2); }

double rate_from_gamma_th(double gamma_th) { return std::log1p(gamma_th) / std::numbers::ln2; }

}  // namespace

SystemParams SystemParams::from_linear(double pi_sd, double pi_sr, double pi_rd, double pi_rr,
                                       double relay_power, double rate, int block_len, int delay) {
  SystemParams p;
  p.pi_sd = pi_sd;
  p.pi_sr = pi_sr;
  p.pi_rd = pi_rd;
  p.pi_rr = pi_rr;
  p.relay_power = relay_power;
  p.rate = rate;
  p.gamma_th = gamma_th_from_rate(rate);
  p.block_len = block_len;
  p.delay = delay;
  p.validate();
  return p;
}

SystemParams SystemParams::from_db(double pi_sd_db, double pi_sr_db, double pi_rd_db,
                                   double pi_rr_db, double relay_power, double rate, int block_len,
                                   int delay) {
  return from_linear(db_to_linear(pi_sd_db), db_to_linear(pi_sr_db), db_to_linear(pi_rd_db),
                     db_to_linear(pi_rr_db), relay_power, rate, block_len, delay);
}

SystemParams SystemParams::with_rate(double new_rate) const {
  SystemParams p = *this;
  p.rate = new_rate;
  p.gamma_th = gamma_th_from_rate(new_rate);
  p.validate();
  return p;
}

SystemParams SystemParams::with_gamma_th(double new_gamma_th) const {
  SystemParams p = *this;
  p.gamma_th = new_gamma_th;
  p.rate = rate_from_gamma_th(new_gamma_th);
  p.validate();
  return p;
}

void SystemParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("SystemParams: ") + what);
  };
  require(std::isfinite(pi_sd) && pi_sd > 0.0, "pi_sd must be > 0");
  require(std::isfinite(pi_sr) && pi_sr > 0.0, "pi_sr must be > 0");
  require(std::isfinite(pi_rd) && pi_rd > 0.0, "pi_rd must be > 0");
  require(std::isfinite(pi_rr) && pi_rr >= 0.0, "pi_rr must be >= 0");
  require(std::isfinite(relay_power) && relay_power >= 0.0, "relay_power must be >= 0");
  require(std::isfinite(rate) && rate > 0.0, "rate must be > 0");
  require(std::isfinite(gamma_th) && gamma_th > 0.0, "gamma_th must be > 0");
  require(block_len >= 1, "block_len must be >= 1");
  require(delay >= 1, "delay must be >= 1");
}

}  // namespace fdrelay
