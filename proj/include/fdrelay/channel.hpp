#pragma once

#include <complex>

#include "fdrelay/params.hpp"
#include "fdrelay/rng.hpp"

namespace fdrelay {

/**
 * One block-fading realization: the four channel coefficients and the link
 * SNRs derived from them.
 *
 *   gamma_sd = |h_sd|^2
 *   gamma_rd = P |h_rd|^2
 *   gamma_sr = |h_sr|^2 / (P |h_rr|^2 + 1)   (SINR at the relay, RSI included)
 *
 * gamma_sr is always computed with the cooperative-mode P: the cooperation
 * decision is made after observing the block, before any power is actually
 * spent.
 */
struct ChannelBlock {
  std::complex<double> h_sd;
  std::complex<double> h_sr;
  std::complex<double> h_rd;
  std::complex<double> h_rr;
  double gamma_sd = 0.0;
  double gamma_rd = 0.0;
  double gamma_sr = 0.0;
};

/// Draws one block: each h_ij is i.i.d. CN(0, pi_ij), so |h_ij|^2 is
/// exponential with mean pi_ij. Draw order is fixed (sd, sr, rd, rr) and all
/// four pairs are consumed even when a variance is zero, keeping streams
/// aligned across parameter variations.
ChannelBlock sample_block(const SystemParams& params, RngStream& rng);

/// True iff gamma < gamma_th (the boundary counts as "no outage").
bool link_outage(double gamma, const SystemParams& params);

}  // namespace fdrelay
