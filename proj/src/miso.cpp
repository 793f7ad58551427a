#include "fdrelay/miso.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdrelay {

MisoBlockSpec MisoBlockSpec::from_block(const ChannelBlock& block, const SystemParams& params) {
  MisoBlockSpec s;
  s.alpha = block.gamma_sd + block.gamma_rd;
  // |sqrt(P) conj(h_sd) h_rd| = sqrt(Gamma_sd * Gamma_rd) with Gamma_rd = P|h_rd|^2.
  s.beta_mag = std::sqrt(block.gamma_sd * block.gamma_rd);
  s.block_len = params.block_len;
  s.delay = params.delay;
  return s;
}

void MisoBlockSpec::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("MisoBlockSpec: alpha must be finite and >= 0");
  if (!(beta_mag >= 0.0) || !std::isfinite(beta_mag))
    throw std::invalid_argument("MisoBlockSpec: beta_mag must be finite and >= 0");
  // Allow a few ulps of slack: beta_mag is often formed as sqrt(x*y) with
  // alpha = x + y, where rounding can push 2|beta| marginally past alpha.
  if (2.0 * beta_mag > alpha * (1.0 + 1e-12))
    throw std::invalid_argument("MisoBlockSpec: requires 2*beta_mag <= alpha");
  if (block_len < 1 || delay < 1)
    throw std::invalid_argument("MisoBlockSpec: block_len and delay must be >= 1");
}

std::vector<double> eigenvalues_closed_form(const MisoBlockSpec& spec) {
  spec.validate();
  if (spec.block_len % spec.delay != 0)
    throw std::invalid_argument("eigenvalues_closed_form: block_len must be a multiple of delay");
  const int m = spec.block_len / spec.delay;
  std::vector<double> lam;
  lam.reserve(spec.block_len);
  for (int i = 1; i <= m; ++i) {
    const double angle =
        static_cast<double>(i) * spec.delay * std::numbers::pi / (spec.block_len + spec.delay);
    double v = spec.alpha + 2.0 * spec.beta_mag * std::cos(angle);
    if (v < 0.0) v = 0.0;  // PSD by construction; clip rounding residue
    lam.insert(lam.end(), spec.delay, v);
  }
  return lam;
}

std::vector<double> gram_eigenvalues_oracle(std::complex<double> h_sd, std::complex<double> h_rd,
                                            double relay_power, int block_len, int delay) {
  if (block_len < 1 || delay < 1)
    throw std::invalid_argument("gram_eigenvalues_oracle: block_len and delay must be >= 1");
  const double alpha = std::norm(h_sd) + relay_power * std::norm(h_rd);
  const std::complex<double> beta = std::sqrt(relay_power) * std::conj(h_sd) * h_rd;

  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(block_len, block_len);
  for (int i = 0; i < block_len; ++i) {
    g(i, i) = alpha;
    if (i + delay < block_len) {
      g(i + delay, i) = beta;             // beta * B^D
      g(i, i + delay) = std::conj(beta);  // conj(beta) * F^D
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g, Eigen::EigenvaluesOnly);
  std::vector<double> lam(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + block_len);
  std::sort(lam.begin(), lam.end(), std::greater<>());
  for (auto& v : lam) v = std::max(v, 0.0);
  return lam;
}

double mutual_info_block(const ChannelBlock& block, const SystemParams& params,
                         bool relay_active) {
  const double inv_ln2 = 1.0 / std::numbers::ln2;
  if (!relay_active || params.relay_power == 0.0 || block.gamma_rd == 0.0)
    return params.block_len * std::log1p(block.gamma_sd) * inv_ln2;

  if (params.closed_form_geometry()) {
    const int m = params.miso_order();
    const double alpha = block.gamma_sd + block.gamma_rd;
    const double two_beta = 2.0 * std::sqrt(block.gamma_sd * block.gamma_rd);
    double nats = 0.0;
    for (int i = 1; i <= m; ++i) {
      const double angle = static_cast<double>(i) * params.delay * std::numbers::pi /
                           (params.block_len + params.delay);
      double lam = alpha + two_beta * std::cos(angle);
      if (lam < 0.0) lam = 0.0;
      nats += std::log1p(lam);
    }
    return params.delay * nats * inv_ln2;
  }

  const auto lam = gram_eigenvalues_oracle(block.h_sd, block.h_rd, params.relay_power,
                                           params.block_len, params.delay);
  double nats = 0.0;
  for (double v : lam) nats += std::log1p(v);
  return nats * inv_ln2;
}

double effective_snr(double info_bits, int block_len) {
  if (!(info_bits >= 0.0)) throw std::invalid_argument("effective_snr: info_bits must be >= 0");
  return std::expm1(info_bits / block_len * std::numbers::ln2);
}

}  // namespace fdrelay
