#pragma once

#include "fdrelay/channel.hpp"
#include "fdrelay/miso.hpp"
#include "fdrelay/params.hpp"
#include "fdrelay/protocol_kind.hpp"

namespace fdrelay {

/// Result of running one cooperation policy on one fading block.
struct BlockOutcome {
  bool relay_active = false;   // relay spent power on this block
  double effective_snr = 0.0;  // 2^(info_bits/L) - 1
  bool in_outage = false;      // effective_snr < gamma_th
  double info_bits = 0.0;      // exact block mutual information, bits
};

/// Per-block cooperation decision, from channel state the policy can see:
///   DT    -> never
///   SDF   -> gamma_sr >= gamma_th
///   ISDF  -> gamma_sr >= gamma_th and gamma_sd < gamma_th (the destination's
///            outage feedback is modeled as one ideal, instantaneous bit)
///   NSFDR -> always
bool decide_cooperation(ProtocolKind kind, const ChannelBlock& block, const SystemParams& params);

/// Applies the policy: mutual information with the relay on (P as configured)
/// or off (P = 0), effective SNR, and the outage flag.
///
/// Non-selective FDR spends power on every block, but decode-and-forward
/// cannot regenerate a message the relay failed to decode; blocks with
/// gamma_sr < gamma_th are scored as outage with effective_snr = 0. That
/// convention only feeds the power-expenditure comparison, not SNR curves.
BlockOutcome run_block(ProtocolKind kind, const ChannelBlock& block, const SystemParams& params);

}  // namespace fdrelay
