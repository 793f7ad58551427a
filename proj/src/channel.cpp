#include "fdrelay/channel.hpp"

namespace fdrelay {

ChannelBlock sample_block(const SystemParams& params, RngStream& rng) {
  ChannelBlock b;
  b.h_sd = rng.next_cgauss(params.pi_sd);
  b.h_sr = rng.next_cgauss(params.pi_sr);
  b.h_rd = rng.next_cgauss(params.pi_rd);
  b.h_rr = rng.next_cgauss(params.pi_rr);
  b.gamma_sd = std::norm(b.h_sd);
  b.gamma_rd = params.relay_power * std::norm(b.h_rd);
  b.gamma_sr = std::norm(b.h_sr) / (params.relay_power * std::norm(b.h_rr) + 1.0);
  return b;
}

bool link_outage(double gamma, const SystemParams& params) { return gamma < params.gamma_th; }

}  // namespace fdrelay
