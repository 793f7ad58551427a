#include "fdrelay/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdrelay {

namespace {

// Exponential CDF / PDF with the given mean.
inline double exp_cdf(double gamma, double mean) {
  return gamma <= 0.0 ? 0.0 : -std::expm1(-gamma / mean);
}

inline double exp_pdf(double gamma, double mean) {
  return gamma < 0.0 ? 0.0 : std::exp(-gamma / mean) / mean;
}

inline double clamp_prob(double v) { return std::clamp(v, 0.0, 1.0); }

// Means of the two summands of the end-to-end SNR: a for the direct link,
// b for the relay branch.
struct Means {
  double a;  // pi_sd
  double b;  // P * pi_rd
};

inline Means means_of(const SystemParams& p) { return {p.pi_sd, p.relay_branch_mean()}; }

}  // namespace

namespace detail {

double exp_cdf_diff_ratio(double gamma, double a, double b) {
  if (gamma <= 0.0 && b > 0.0) return 0.0;
  if (b == 0.0) return -std::exp(-gamma / a) / a;  // F_rd degenerates to a unit step
  const double d = b - a;
  if (std::abs(d) < 1e-9 * std::max(a, b)) {
    // Erlang-2 limit of the hypoexponential family.
    const double s = 0.5 * (a + b);
    return -(gamma / (s * s)) * std::exp(-gamma / s);
  }
  // exp(-g/a) - exp(-g/b) factored so the expm1 argument is negative: no
  // cancellation anywhere, including arbitrarily close to the a == b band.
  if (d > 0.0) return std::exp(-gamma / b) * std::expm1(-gamma * d / (a * b)) / d;
  return -std::exp(-gamma / a) * std::expm1(gamma * d / (a * b)) / d;
}

double conditional_sum_cdf(double gamma, const SystemParams& params) {
  const auto [a, b] = means_of(params);
  const double gth = params.gamma_th;
  const double p_sd = exp_cdf(gth, a);
  if (gamma <= 0.0) return 0.0;
  if (gamma <= gth) return clamp_prob(cdf_hypoexp(gamma, params) / p_sd);
  // Above the threshold the conditioned summand is capped at gamma_th, so the
  // tail decays purely through the relay branch.
  const double tail = (b > 0.0) ? std::exp(-(gamma - gth) / b) : 0.0;
  return clamp_prob(1.0 + b * exp_cdf_diff_ratio(gth, a, b) * tail / p_sd);
}

}  // namespace detail

LinkOutageSet LinkOutageSet::from_params(const SystemParams& params) {
  LinkOutageSet s;
  s.p_sr = p_out_sr(params);
  s.p_sd = p_out_sd(params);
  const double b = params.relay_branch_mean();
  s.p_rd = (b > 0.0) ? exp_cdf(params.gamma_th, b) : 1.0;
  return s;
}

double p_out_sr(const SystemParams& params) {
  // P{ X/(P*Y+1) < gth } with X ~ Exp(pi_sr), Y ~ Exp(pi_rr). Averaging the
  // conditional exponential tail over Y gives
  //   1 - pi_sr e^{-gth/pi_sr} / (gth P pi_rr + pi_sr),
  // rearranged here so the rate -> 0 limit does not cancel.
  const double q = params.gamma_th * params.relay_power * params.pi_rr / params.pi_sr;
  return clamp_prob((q + exp_cdf(params.gamma_th, params.pi_sr)) / (1.0 + q));
}

double p_out_sd(const SystemParams& params) { return exp_cdf(params.gamma_th, params.pi_sd); }

double cdf_hypoexp(double gamma, const SystemParams& params) {
  if (gamma <= 0.0) return 0.0;
  const auto [a, b] = means_of(params);
  // 1 - [b e^{-g/b} - a e^{-g/a}]/(b - a), written as F_sd + b*K with
  // K = (F_rd - F_sd)/(b - a); K carries the degenerate Erlang-2 limit.
  return clamp_prob(exp_cdf(gamma, a) + b * detail::exp_cdf_diff_ratio(gamma, a, b));
}

double pdf_hypoexp(double gamma, const SystemParams& params) {
  if (gamma < 0.0) return 0.0;
  const auto [a, b] = means_of(params);
  return std::max(0.0, -detail::exp_cdf_diff_ratio(gamma, a, b));
}

double p_out_protocol(ProtocolKind kind, const SystemParams& params) {
  if (kind != ProtocolKind::kSdf && kind != ProtocolKind::kIsdf)
    throw std::invalid_argument("p_out_protocol: only sdf/isdf have this closed form");
  const double p_sr = p_out_sr(params);
  const double p_sd = p_out_sd(params);
  return clamp_prob(p_sr * p_sd + (1.0 - p_sr) * cdf_hypoexp(params.gamma_th, params));
}

double cdf_dt(double gamma, const SystemParams& params) { return exp_cdf(gamma, params.pi_sd); }

double pdf_dt(double gamma, const SystemParams& params) { return exp_pdf(gamma, params.pi_sd); }

double cdf_sdf(double gamma, const SystemParams& params) {
  if (gamma <= 0.0) return 0.0;
  const auto [a, b] = means_of(params);
  const double co = 1.0 - p_out_sr(params);
  // Mixture p_sr F_sd + (1 - p_sr) F_hypo, rearranged to
  // F_sd + (1 - p_sr) b K -- the same expression the ISDF CDF takes below
  // gamma_th, which is what makes their outage probabilities identical.
  return clamp_prob(exp_cdf(gamma, a) + co * b * detail::exp_cdf_diff_ratio(gamma, a, b));
}

double pdf_sdf(double gamma, const SystemParams& params) {
  if (gamma < 0.0) return 0.0;
  const double p_sr = p_out_sr(params);
  return std::max(0.0, p_sr * exp_pdf(gamma, params.pi_sd) +
                           (1.0 - p_sr) * pdf_hypoexp(gamma, params));
}

double cdf_isdf(double gamma, const SystemParams& params) {
  if (gamma <= 0.0) return 0.0;
  const auto [a, b] = means_of(params);
  const double gth = params.gamma_th;
  const double co = 1.0 - p_out_sr(params);
  if (gamma <= gth)
    return clamp_prob(exp_cdf(gamma, a) + co * b * detail::exp_cdf_diff_ratio(gamma, a, b));
  // Above gamma_th, derived from the conditional-sum integral (relay branch
  // active only when the direct link was in outage):
  //   F_sd(g) + b (1-p_sr) K(gth) e^{-(g-gth)/b}.
  // The superficially similar form with (p_sd/p_rd - 1) in place of
  // (p_rd - p_sd)/(1 - p_rd) fails continuity at gamma_th and can exceed 1,
  // so it cannot be a CDF; isdf_tail_forms() prints both for audit.
  const double tail = (b > 0.0) ? std::exp(-(gamma - gth) / b) : 0.0;
  return clamp_prob(exp_cdf(gamma, a) + co * b * detail::exp_cdf_diff_ratio(gth, a, b) * tail);
}

double pdf_isdf(double gamma, const SystemParams& params) {
  if (gamma < 0.0) return 0.0;
  const auto [a, b] = means_of(params);
  const double gth = params.gamma_th;
  const double co = 1.0 - p_out_sr(params);
  if (gamma <= gth) {
    // f_sd + (1-p_sr) b (f_rd - f_sd)/(b-a); b*(f_rd - f_sd)/(b-a) folds into
    // -K - e^{-g/a}/a, which stays finite for every b >= 0.
    const double bj = -detail::exp_cdf_diff_ratio(gamma, a, b) - std::exp(-gamma / a) / a;
    return std::max(0.0, exp_pdf(gamma, a) + co * bj);
  }
  const double tail = (b > 0.0) ? std::exp(-(gamma - gth) / b) : 0.0;
  return std::max(0.0,
                  exp_pdf(gamma, a) - co * detail::exp_cdf_diff_ratio(gth, a, b) * tail);
}

double avg_snr(ProtocolKind kind, const SystemParams& params) {
  const double b = params.relay_branch_mean();
  switch (kind) {
    case ProtocolKind::kDt:
      return params.pi_sd;
    case ProtocolKind::kSdf:
      return params.pi_sd + b * (1.0 - p_out_sr(params));
    case ProtocolKind::kIsdf:
      return params.pi_sd + b * (1.0 - p_out_sr(params)) * p_out_sd(params);
    default:
      throw std::invalid_argument("avg_snr: no closed form for non-selective FDR");
  }
}

double cooperation_fraction(ProtocolKind kind, const SystemParams& params) {
  switch (kind) {
    case ProtocolKind::kDt:
      return 0.0;
    case ProtocolKind::kNonSelectiveFdr:
      return 1.0;
    case ProtocolKind::kSdf:
      return 1.0 - p_out_sr(params);
    case ProtocolKind::kIsdf:
      return (1.0 - p_out_sr(params)) * p_out_sd(params);
  }
  throw std::invalid_argument("cooperation_fraction: unknown protocol");
}

AnalyticCurve::AnalyticCurve(std::vector<double> grid_in, std::vector<double> values_in,
                             CurveKind kind_in)
    : grid(std::move(grid_in)), values(std::move(values_in)), kind(kind_in) {
  if (grid.empty() || grid.size() != values.size())
    throw std::invalid_argument("AnalyticCurve: grid/values size mismatch");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !std::isfinite(values[i]))
      throw std::invalid_argument("AnalyticCurve: non-finite entry");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("AnalyticCurve: grid must be strictly increasing");
  }
  if (kind == CurveKind::kCdf) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0.0 || values[i] > 1.0)
        throw std::invalid_argument("AnalyticCurve: CDF value outside [0, 1]");
      if (i > 0 && values[i] < values[i - 1] - 1e-14)
        throw std::invalid_argument("AnalyticCurve: CDF must be non-decreasing");
    }
  } else {
    for (double v : values)
      if (v < 0.0) throw std::invalid_argument("AnalyticCurve: PDF value < 0");
  }
}

AnalyticCurve make_curve(ProtocolKind protocol, CurveKind kind, std::span<const double> grid,
                         const SystemParams& params) {
  double (*cdf)(double, const SystemParams&) = nullptr;
  double (*pdf)(double, const SystemParams&) = nullptr;
  switch (protocol) {
    case ProtocolKind::kDt:
      cdf = cdf_dt;
      pdf = pdf_dt;
      break;
    case ProtocolKind::kSdf:
      cdf = cdf_sdf;
      pdf = pdf_sdf;
      break;
    case ProtocolKind::kIsdf:
      cdf = cdf_isdf;
      pdf = pdf_isdf;
      break;
    case ProtocolKind::kNonSelectiveFdr:
      throw std::invalid_argument("make_curve: non-selective FDR has no analytic curve");
  }
  std::vector<double> values;
  values.reserve(grid.size());
  for (double g : grid) values.push_back(kind == CurveKind::kCdf ? cdf(g, params) : pdf(g, params));
  return AnalyticCurve(std::vector<double>(grid.begin(), grid.end()), std::move(values), kind);
}

IsdfTailForms isdf_tail_forms(double gamma, const SystemParams& params) {
  IsdfTailForms out;
  out.shipped = cdf_isdf(gamma, params);
  const auto [a, b] = means_of(params);
  const LinkOutageSet link = LinkOutageSet::from_params(params);
  const double co = 1.0 - link.p_sr;
  // Unclamped on purpose: the audit is about seeing where this one leaves [0,1].
  out.variant = exp_cdf(gamma, a) +
                b * co * (link.p_sd / link.p_rd - 1.0) * std::exp(-gamma / b) / (b - a);
  return out;
}

}  // namespace fdrelay
