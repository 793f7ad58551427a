#pragma once

#include <cmath>
#include <cstdint>

namespace fdrelay {

/// 10^(x/10). Figure-style parameters arrive in dB; everything internal is linear.
double db_to_linear(double x_db);

/// 10*log10(x). Requires x > 0.
double linear_to_db(double x);

/**
 * Scenario constants for one full-duplex relay configuration.
 *
 * Mean link gains pi_* are linear-scale means of the exponential channel
 * gains |h_*|^2 (source power absorbed into pi_sd and pi_sr). pi_rr is the
 * residual self-interference channel after cancellation, so it may be zero.
 * gamma_th = 2^rate - 1 is derived once and cached.
 *
 * Instances are immutable value objects after construction; all library
 * functions take them by const reference and are safe to call concurrently.
 */
struct SystemParams {
  double pi_sd = 0.0;        // mean gain of the S->D link, linear
  double pi_sr = 0.0;        // mean gain of the S->R link, linear
  double pi_rd = 0.0;        // mean gain of the R->D link, linear
  double pi_rr = 0.0;        // mean gain of the residual self-interference link, >= 0
  double relay_power = 1.0;  // P >= 0; zero models the relay kept silent
  double rate = 0.0;         // source rate R, bits/s/Hz
  double gamma_th = 0.0;     // outage threshold 2^R - 1
  int block_len = 20;        // L, source symbols per fading block
  int delay = 2;             // D, relay processing delay in symbols

  static SystemParams from_linear(double pi_sd, double pi_sr, double pi_rd, double pi_rr,
                                  double relay_power, double rate, int block_len, int delay);
  static SystemParams from_db(double pi_sd_db, double pi_sr_db, double pi_rd_db, double pi_rr_db,
                              double relay_power, double rate, int block_len, int delay);

  /// Copy with a new rate (gamma_th recomputed). Used by rate sweeps.
  SystemParams with_rate(double new_rate) const;
  /// Copy with the threshold given directly; rate = log2(1 + gamma_th).
  SystemParams with_gamma_th(double new_gamma_th) const;

  /// True when block_len is a multiple of delay, enabling the closed-form
  /// eigenvalue path; otherwise the dense oracle path is used.
  bool closed_form_geometry() const { return block_len % delay == 0; }
  /// m = L/D; only meaningful when closed_form_geometry() holds.
  int miso_order() const { return block_len / delay; }

  /// Mean of Gamma_rd = P*|h_rd|^2; shows up as the second hypoexponential rate.
  double relay_branch_mean() const { return relay_power * pi_rd; }

  /// Throws std::invalid_argument when any invariant is violated.
  void validate() const;
};

}  // namespace fdrelay
