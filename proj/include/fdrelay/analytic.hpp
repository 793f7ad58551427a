#pragma once

#include <span>
#include <vector>

#include "fdrelay/params.hpp"
#include "fdrelay/protocol_kind.hpp"

namespace fdrelay {

/// Per-link outage probabilities at gamma_th.
struct LinkOutageSet {
  double p_sr = 0.0;  // P{ Gamma_sr < gamma_th }, RSI included
  double p_sd = 0.0;  // P{ Gamma_sd < gamma_th } = 1 - exp(-gamma_th/pi_sd)
  double p_rd = 0.0;  // P{ Gamma_rd < gamma_th } = 1 - exp(-gamma_th/(P*pi_rd))

  static LinkOutageSet from_params(const SystemParams& params);
};

/// Outage probability of the S->R link: the SINR Gamma_sr = X/(P*Y+1) with
/// X ~ Exp(pi_sr), Y ~ Exp(pi_rr) falls below gamma_th with probability
///   1 - pi_sr * exp(-gamma_th/pi_sr) / (gamma_th*P*pi_rr + pi_sr).
double p_out_sr(const SystemParams& params);

/// Outage probability of the direct link: 1 - exp(-gamma_th/pi_sd).
double p_out_sd(const SystemParams& params);

/// CDF of Gamma_sd + Gamma_rd, the sum of independent exponentials with means
/// pi_sd and P*pi_rd (hypoexponential). Falls back to the Erlang-2 limit when
/// the two means coincide; evaluated in a cancellation-free form near the
/// degenerate band.
double cdf_hypoexp(double gamma, const SystemParams& params);

/// Density of Gamma_sd + Gamma_rd.
double pdf_hypoexp(double gamma, const SystemParams& params);

/// Outage probability of the selective protocols:
///   p_sr * p_sd + (1 - p_sr) * cdf_hypoexp(gamma_th).
/// SDF and ISDF have identical outage events, so both kinds return the same
/// value. Accepts only kSdf / kIsdf.
double p_out_protocol(ProtocolKind kind, const SystemParams& params);

/// End-to-end effective-SNR CDF of direct transmission: F_sd.
double cdf_dt(double gamma, const SystemParams& params);
double pdf_dt(double gamma, const SystemParams& params);

/// End-to-end effective-SNR CDF/PDF of SDF (relay assists whenever it can
/// decode): the mixture p_sr * F_sd + (1 - p_sr) * F_hypoexp.
double cdf_sdf(double gamma, const SystemParams& params);
double pdf_sdf(double gamma, const SystemParams& params);

/// End-to-end effective-SNR CDF/PDF of ISDF (relay assists only when it can
/// decode AND the destination has declared a direct-link outage). Piecewise
/// around gamma_th and continuous there; coincides with the SDF CDF on
/// [0, gamma_th].
double cdf_isdf(double gamma, const SystemParams& params);
double pdf_isdf(double gamma, const SystemParams& params);

/// Mean effective SNR of the alpha-equivalent channel:
///   DT   -> pi_sd
///   SDF  -> pi_sd + P*pi_rd*(1 - p_sr)
///   ISDF -> pi_sd + P*pi_rd*(1 - p_sr)*p_sd
/// Accepts only kDt / kSdf / kIsdf.
double avg_snr(ProtocolKind kind, const SystemParams& params);

/// Fraction of blocks on which the relay spends power:
///   DT -> 0, SDF -> 1 - p_sr, ISDF -> (1 - p_sr)*p_sd, non-selective -> 1.
double cooperation_fraction(ProtocolKind kind, const SystemParams& params);

enum class CurveKind { kCdf, kPdf };

/// A closed-form curve sampled on a strictly increasing linear-SNR grid.
/// CDF curves must be non-decreasing with values in [0, 1]; PDF values
/// must be non-negative. Violations throw std::invalid_argument.
struct AnalyticCurve {
  std::vector<double> grid;    // linear SNR, strictly increasing
  std::vector<double> values;  // same length as grid
  CurveKind kind = CurveKind::kCdf;

  AnalyticCurve(std::vector<double> grid_in, std::vector<double> values_in, CurveKind kind_in);
};

/// Samples the matching closed form on the given grid. Throws
/// std::invalid_argument for kNonSelectiveFdr (no analytic curve) and for
/// kDt with kind == kPdf requests outside the supported set.
AnalyticCurve make_curve(ProtocolKind protocol, CurveKind kind, std::span<const double> grid,
                         const SystemParams& params);

/// Both candidate closed forms of the ISDF CDF above gamma_th, for audit.
/// `shipped` is the branch derived from the defining conditional-sum integral
/// (continuous at gamma_th, verified against numerical convolution).
/// `variant` replaces the (p_rd - p_sd)/(1 - p_rd) factor by (p_sd/p_rd - 1)
/// with opposite sign; it is discontinuous at gamma_th and can exceed 1, so
/// it cannot be a CDF. Retained only so the two can be printed side by side.
struct IsdfTailForms {
  double shipped = 0.0;
  double variant = 0.0;
};
IsdfTailForms isdf_tail_forms(double gamma, const SystemParams& params);

namespace detail {

/// (F_rd(gamma) - F_sd(gamma)) / (b - a) for exponential CDFs with means
/// a and b, evaluated without cancellation; tends to -gamma*exp(-gamma/s)/s^2
/// as b -> a. The workhorse behind every hypoexponential-flavored expression
/// here.
double exp_cdf_diff_ratio(double gamma, double a, double b);

/// Conditional CDF P{ Gamma_sd + Gamma_rd < gamma | Gamma_sd < gamma_th }
/// in closed form (the two-piece integral around gamma_th). Exposed for the
/// convolution-oracle tests.
double conditional_sum_cdf(double gamma, const SystemParams& params);

}  // namespace detail

}  // namespace fdrelay
