#pragma once

#include <complex>
#include <vector>

#include "fdrelay/channel.hpp"
#include "fdrelay/params.hpp"

namespace fdrelay {

/**
 * Parameters of the Gram matrix of the virtual MISO block channel formed by
 * the source and relay transmitting delay-staggered copies of one block:
 *
 *   G = alpha*I + beta*B^D + conj(beta)*F^D,
 *   alpha = Gamma_sd + Gamma_rd,   |beta| = sqrt(Gamma_sd * Gamma_rd),
 *
 * with B/F the one-step backward/forward shift matrices. Only |beta| enters
 * the spectrum (a diagonal unitary similarity removes the phase).
 * Cauchy-Schwarz gives 2|beta| <= alpha, so G is positive semidefinite.
 */
struct MisoBlockSpec {
  double alpha = 0.0;     // Gram diagonal
  double beta_mag = 0.0;  // |sqrt(P) * conj(h_sd) * h_rd|
  int block_len = 0;      // L
  int delay = 0;          // D

  static MisoBlockSpec from_block(const ChannelBlock& block, const SystemParams& params);

  /// Throws std::invalid_argument on a violated invariant.
  void validate() const;
};

/// All L eigenvalues of the Gram matrix for L = m*D:
///   lambda = alpha + 2|beta| cos(i*D*pi/(L+D)),  i = 1..m, each repeated D
/// times, returned grouped by i (descending). Throws std::invalid_argument
/// when L is not a multiple of D; callers must take the oracle path then.
std::vector<double> eigenvalues_closed_form(const MisoBlockSpec& spec);

/// Reference path: builds the L x L Hermitian Gram matrix explicitly and
/// returns its eigenvalues by dense eigendecomposition, sorted descending.
/// No divisibility requirement on L and D.
std::vector<double> gram_eigenvalues_oracle(std::complex<double> h_sd, std::complex<double> h_rd,
                                            double relay_power, int block_len, int delay);

/// Mutual information of one block in bits: sum_i log2(1 + lambda_i) over the
/// L Gram eigenvalues. With the relay silent (relay_active = false, or P = 0)
/// this collapses to L * log2(1 + Gamma_sd). Uses the closed-form eigenvalues
/// when L = m*D and the dense oracle otherwise. Accumulates in the log domain,
/// so large L cannot overflow.
double mutual_info_block(const ChannelBlock& block, const SystemParams& params, bool relay_active);

/// SNR of the equivalent single-antenna channel carrying the same per-symbol
/// mutual information: 2^(info_bits/L) - 1.
double effective_snr(double info_bits, int block_len);

}  // namespace fdrelay
