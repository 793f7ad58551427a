#include "fdrelay/protocol.hpp"

namespace fdrelay {

bool decide_cooperation(ProtocolKind kind, const ChannelBlock& block, const SystemParams& params) {
  switch (kind) {
    case ProtocolKind::kDt:
      return false;
    case ProtocolKind::kNonSelectiveFdr:
      return true;
    case ProtocolKind::kSdf:
      return !link_outage(block.gamma_sr, params);
    case ProtocolKind::kIsdf:
      return !link_outage(block.gamma_sr, params) && link_outage(block.gamma_sd, params);
  }
  return false;
}

BlockOutcome run_block(ProtocolKind kind, const ChannelBlock& block, const SystemParams& params) {
  BlockOutcome out;
  out.relay_active = decide_cooperation(kind, block, params);

  if (kind == ProtocolKind::kNonSelectiveFdr && link_outage(block.gamma_sr, params)) {
    // Relay transmits anyway but forwards an undecoded message; the block is
    // lost. Power is still spent (relay_active stays true).
    out.info_bits = 0.0;
    out.effective_snr = 0.0;
    out.in_outage = true;
    return out;
  }

  out.info_bits = mutual_info_block(block, params, out.relay_active);
  // With the relay silent the block MISO channel is the direct link, so the
  // effective SNR is gamma_sd itself; assigning it directly keeps that exact.
  out.effective_snr =
      out.relay_active ? effective_snr(out.info_bits, params.block_len) : block.gamma_sd;
  out.in_outage = out.effective_snr < params.gamma_th;
  return out;
}

}  // namespace fdrelay
