#include <doctest.h>

#include <cmath>
#include <vector>

#include "fdrelay/analytic.hpp"
#include "fdrelay/rng.hpp"
#include "support/oracles.hpp"

using namespace fdrelay;

namespace {

SystemParams fig2_params() {
  return SystemParams::from_db(10, 20, 20, 10, 1.0, 1.0, 20, 2)
      .with_gamma_th(db_to_linear(5.0));
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  g.reserve(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g.push_back(lo * std::exp(i * step));
  return g;
}

double exp_draw(RngStream& rng, double mean) { return -mean * std::log(rng.next_unit_open()); }

SystemParams random_params(RngStream& rng) {
  auto gain = [&] { return db_to_linear(-10.0 + 40.0 * rng.next_unit()); };
  const double rate = 0.25 + 7.75 * rng.next_unit();
  for (;;) {
    const auto p = SystemParams::from_linear(gain(), gain(), gain(), gain(),
                                             0.25 + 1.75 * rng.next_unit(), rate, 20, 2);
    const double a = p.pi_sd, b = p.relay_branch_mean();
    if (std::abs(b - a) >= 1e-9 * std::max(a, b)) return p;  // skip the Erlang band
  }
}

}  // namespace

TEST_SUITE("analytic") {
  TEST_CASE("p_out_sr closed form and limits") {
    // pi_sr = 10, gamma_th = 1, P = 1, pi_rr = 10.
    const auto p = SystemParams::from_linear(10, 10, 10, 10, 1.0, 1.0, 20, 2).with_gamma_th(1.0);
    CHECK(p_out_sr(p) == doctest::Approx(0.54758129098202021).epsilon(1e-12));

    const auto no_rsi = SystemParams::from_linear(10, 10, 10, 0.0, 1.0, 1.0, 20, 2)
                            .with_gamma_th(1.0);
    CHECK(p_out_sr(no_rsi) == doctest::Approx(-std::expm1(-0.1)).epsilon(1e-14));

    const auto silent = SystemParams::from_linear(10, 10, 10, 10, 0.0, 1.0, 20, 2)
                            .with_gamma_th(1.0);
    CHECK(p_out_sr(silent) == doctest::Approx(-std::expm1(-0.1)).epsilon(1e-14));
  }

  TEST_CASE("p_out_sr against Monte Carlo over both fading gains" * doctest::timeout(120)) {
    const auto p = SystemParams::from_linear(10, 10, 10, 10, 1.0, 1.0, 20, 2).with_gamma_th(1.0);
    const int n = 10000000;
    RngStream rng(611, 0);
    std::int64_t below = 0;
    for (int i = 0; i < n; ++i) {
      const double x = exp_draw(rng, p.pi_sr);
      const double y = exp_draw(rng, p.pi_rr);
      below += (x / (p.relay_power * y + 1.0) < p.gamma_th) ? 1 : 0;
    }
    const double ana = p_out_sr(p);
    const double sigma = std::sqrt(ana * (1.0 - ana) / n);
    CHECK(std::abs(static_cast<double>(below) / n - ana) < 3.0 * sigma);
  }

  TEST_CASE("p_out_sd examples") {
    const auto tiny = fig2_params().with_rate(1e-9);
    CHECK(p_out_sd(tiny) < 1e-9);

    const auto unit = SystemParams::from_linear(10, 100, 100, 10, 1, 1, 20, 2).with_gamma_th(10.0);
    CHECK(p_out_sd(unit) == doctest::Approx(0.63212055882855768).epsilon(1e-14));

    CHECK(p_out_sd(fig2_params()) == doctest::Approx(0.2711065858899754).epsilon(1e-12));
  }

  TEST_CASE("hypoexponential CDF: frozen value, zero, and Monte Carlo") {
    // pi_sd = 1, P*pi_rd = 2, gamma = 2.
    const auto p = SystemParams::from_linear(1, 10, 2, 0, 1.0, 1.0, 20, 2);
    CHECK(cdf_hypoexp(0.0, p) == 0.0);
    CHECK(cdf_hypoexp(2.0, p) == doctest::Approx(0.39957640089372803).epsilon(1e-12));

    const int n = 1000000;
    RngStream rng(612, 0);
    std::int64_t below = 0;
    for (int i = 0; i < n; ++i)
      below += (exp_draw(rng, 1.0) + exp_draw(rng, 2.0) < 2.0) ? 1 : 0;
    const double ana = cdf_hypoexp(2.0, p);
    CHECK(std::abs(static_cast<double>(below) / n - ana) <
          4.0 * std::sqrt(ana * (1.0 - ana) / n));
  }

  TEST_CASE("hypoexponential CDF collapses to the Erlang-2 limit at equal means") {
    const double s = 3.0;
    const auto p = SystemParams::from_linear(s, 10, s, 0, 1.0, 1.0, 20, 2);
    for (double g : log_grid(1e-3, 50.0, 40)) {
      const double erlang = 1.0 - std::exp(-g / s) * (1.0 + g / s);
      CHECK(cdf_hypoexp(g, p) == doctest::Approx(erlang).epsilon(1e-12));
      CHECK(cdf_hypoexp(g, p) == doctest::Approx(oracles::conv_sum_cdf(g, s, s)).epsilon(1e-8));
    }
  }

  TEST_CASE("hypoexponential CDF is stable arbitrarily close to the degenerate band") {
    for (double rel : {3e-9, 1e-7, 1e-5, 1e-3}) {
      const double a = 3.0, b = 3.0 * (1.0 + rel);
      const auto p = SystemParams::from_linear(a, 10, b, 0, 1.0, 1.0, 20, 2);
      for (double g : {0.5, 3.0, 10.0})
        CHECK(cdf_hypoexp(g, p) ==
              doctest::Approx(oracles::conv_sum_cdf(g, a, b, 1e-13)).epsilon(1e-9));
    }
  }

  TEST_CASE("protocol outage probability") {
    const auto fig2 = fig2_params();
    const double po = p_out_protocol(ProtocolKind::kSdf, fig2);
    CHECK(po == doctest::Approx(0.07483143281875639).epsilon(1e-10));
    CHECK(p_out_protocol(ProtocolKind::kIsdf, fig2) == po);
    CHECK(cdf_sdf(fig2.gamma_th, fig2) == doctest::Approx(po).epsilon(1e-12));
    CHECK(cdf_isdf(fig2.gamma_th, fig2) == doctest::Approx(po).epsilon(1e-12));

    // Relay never decodes: outage reduces to the direct link.
    const auto deaf = SystemParams::from_linear(10, 1e-9, 100, 10, 1, 1, 20, 2)
                          .with_gamma_th(fig2.gamma_th);
    CHECK(p_out_protocol(ProtocolKind::kSdf, deaf) ==
          doctest::Approx(p_out_sd(deaf)).epsilon(1e-9));

    CHECK(p_out_protocol(ProtocolKind::kSdf, fig2.with_rate(1e-9)) < 1e-9);

    CHECK_THROWS_AS(p_out_protocol(ProtocolKind::kDt, fig2), std::invalid_argument);
    CHECK_THROWS_AS(p_out_protocol(ProtocolKind::kNonSelectiveFdr, fig2), std::invalid_argument);
  }

  TEST_CASE("protocol outage against the alpha-event Monte Carlo") {
    const auto p = fig2_params();
    const int n = 1000000;
    RngStream rng(613, 0);
    std::int64_t bad = 0;
    for (int i = 0; i < n; ++i) {
      const double g_sr = exp_draw(rng, p.pi_sr) / (p.relay_power * exp_draw(rng, p.pi_rr) + 1.0);
      const double g_sd = exp_draw(rng, p.pi_sd);
      const double g_rd = p.relay_power * exp_draw(rng, p.pi_rd);
      const bool outage = g_sr < p.gamma_th ? (g_sd < p.gamma_th) : (g_sd + g_rd < p.gamma_th);
      bad += outage ? 1 : 0;
    }
    const double ana = p_out_protocol(ProtocolKind::kSdf, p);
    CHECK(std::abs(static_cast<double>(bad) / n - ana) < 3.0 * std::sqrt(ana * (1 - ana) / n));
  }

  TEST_CASE("SDF CDF limit cases") {
    const auto fig2 = fig2_params();
    const auto grid = log_grid(1e-3, 1e4, 120);

    const auto deaf = SystemParams::from_linear(10, 1e-12, 100, 10, 1, 1, 20, 2)
                          .with_gamma_th(fig2.gamma_th);
    for (double g : grid) CHECK(cdf_sdf(g, deaf) == doctest::Approx(cdf_dt(g, deaf)).epsilon(1e-8));

    const auto perfect = SystemParams::from_linear(10, 1e12, 100, 0, 1, 1, 20, 2)
                             .with_gamma_th(fig2.gamma_th);
    for (double g : grid)
      CHECK(cdf_sdf(g, perfect) ==
            doctest::Approx(cdf_hypoexp(g, perfect)).epsilon(1e-9).scale(1.0));
  }

  TEST_CASE("ISDF CDF: reduction, continuity, and the shared outage region") {
    const auto fig2 = fig2_params();

    const auto deaf = SystemParams::from_linear(10, 1e-12, 100, 10, 1, 1, 20, 2)
                          .with_gamma_th(fig2.gamma_th);
    for (double g : log_grid(1e-3, 1e4, 120))
      CHECK(cdf_isdf(g, deaf) == doctest::Approx(cdf_dt(g, deaf)).epsilon(1e-8));

    // Continuity across the threshold.
    const double gth = fig2.gamma_th;
    const double below = cdf_isdf(gth * (1.0 - 1e-12), fig2);
    const double at = cdf_isdf(gth, fig2);
    const double above = cdf_isdf(gth * (1.0 + 1e-12), fig2);
    CHECK(std::abs(at - below) < 1e-11);
    CHECK(std::abs(above - at) < 1e-11);

    // Identical to SDF everywhere below the threshold.
    for (int i = 0; i <= 200; ++i) {
      const double g = gth * i / 200.0;
      const double s = cdf_sdf(g, fig2);
      const double is = cdf_isdf(g, fig2);
      CHECK(std::abs(s - is) <= 1e-12 * std::max(1.0, std::abs(s)));
    }
  }

  TEST_CASE("CDF ordering, monotonicity, and saturation across random scenarios") {
    RngStream rng(614, 0);
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = random_params(rng);
      const double top = 1e6 * std::max(p.pi_sd, p.relay_branch_mean());
      double prev_sdf = -1.0, prev_isdf = -1.0, prev_dt = -1.0;
      for (double g : log_grid(1e-4 * p.gamma_th, top, 160)) {
        const double dt = cdf_dt(g, p), sdf = cdf_sdf(g, p), isdf = cdf_isdf(g, p);
        CHECK(sdf <= isdf + 1e-14);
        CHECK(isdf <= dt + 1e-14);
        CHECK(sdf >= prev_sdf - 1e-14);
        CHECK(isdf >= prev_isdf - 1e-14);
        CHECK(dt >= prev_dt - 1e-14);
        prev_sdf = sdf;
        prev_isdf = isdf;
        prev_dt = dt;
      }
      CHECK(cdf_sdf(0.0, p) == 0.0);
      CHECK(cdf_isdf(0.0, p) == 0.0);
      CHECK(cdf_sdf(top, p) >= 1.0 - 1e-6);
      CHECK(cdf_isdf(top, p) >= 1.0 - 1e-6);
    }
  }

  TEST_CASE("PDFs are the derivatives of their CDFs") {
    RngStream rng(615, 0);
    std::vector<SystemParams> cases = {fig2_params()};
    for (int i = 0; i < 6; ++i) cases.push_back(random_params(rng));
    for (const auto& p : cases) {
      const double scale = std::max(p.pi_sd, p.relay_branch_mean());
      for (double g : log_grid(1e-3 * p.gamma_th, 20.0 * scale, 60)) {
        if (std::abs(g - p.gamma_th) < 1e-3 * p.gamma_th) continue;  // kink point
        const double h = 1e-6 * std::max(1.0, g);
        auto deriv = [&](auto cdf) { return (cdf(g + h, p) - cdf(g - h, p)) / (2.0 * h); };
        CHECK(deriv([](double x, const SystemParams& q) { return cdf_sdf(x, q); }) ==
              doctest::Approx(pdf_sdf(g, p)).epsilon(1e-5).scale(1.0));
        CHECK(deriv([](double x, const SystemParams& q) { return cdf_isdf(x, q); }) ==
              doctest::Approx(pdf_isdf(g, p)).epsilon(1e-5).scale(1.0));
        CHECK(deriv([](double x, const SystemParams& q) { return cdf_dt(x, q); }) ==
              doctest::Approx(pdf_dt(g, p)).epsilon(1e-5).scale(1.0));
      }
    }
  }

  TEST_CASE("PDFs integrate to one and reproduce the closed-form means") {
    RngStream rng(616, 0);
    std::vector<SystemParams> cases = {fig2_params()};
    for (int i = 0; i < 4; ++i) cases.push_back(random_params(rng));
    for (const auto& p : cases) {
      const double b = p.relay_branch_mean();
      const double upper = p.gamma_th + 60.0 * std::max(p.pi_sd, b);
      const double scale = std::min({p.pi_sd, b > 0.0 ? b : p.pi_sd, p.gamma_th}) / 16.0;
      for (auto kind : {ProtocolKind::kSdf, ProtocolKind::kIsdf}) {
        auto pdf = kind == ProtocolKind::kSdf ? pdf_sdf : pdf_isdf;
        auto f = [&](double x) { return pdf(x, p); };
        const double mass = oracles::integrate_ladder(f, upper, p.gamma_th, scale);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));

        auto xf = [&](double x) { return x * pdf(x, p); };
        const double mean = oracles::integrate_ladder(xf, upper, p.gamma_th, scale);
        CHECK(mean == doctest::Approx(avg_snr(kind, p)).epsilon(1e-6));
      }
    }
  }

  TEST_CASE("average SNR limits") {
    const auto base = fig2_params();
    const double b = base.relay_branch_mean();

    const auto low = base.with_rate(1e-7);
    CHECK(avg_snr(ProtocolKind::kSdf, low) == doctest::Approx(base.pi_sd + b).epsilon(1e-5));
    CHECK(avg_snr(ProtocolKind::kIsdf, low) == doctest::Approx(base.pi_sd).epsilon(1e-5));

    const auto high = base.with_rate(40.0);
    CHECK(avg_snr(ProtocolKind::kSdf, high) == doctest::Approx(base.pi_sd).epsilon(1e-9));
    CHECK(avg_snr(ProtocolKind::kIsdf, high) == doctest::Approx(base.pi_sd).epsilon(1e-9));

    const auto mid = base.with_rate(2.0);
    CHECK(avg_snr(ProtocolKind::kIsdf, mid) < avg_snr(ProtocolKind::kSdf, mid));
    CHECK(avg_snr(ProtocolKind::kDt, mid) == base.pi_sd);
    CHECK_THROWS_AS(avg_snr(ProtocolKind::kNonSelectiveFdr, mid), std::invalid_argument);
  }

  TEST_CASE("cooperation fractions") {
    const auto p = fig2_params();
    CHECK(cooperation_fraction(ProtocolKind::kDt, p) == 0.0);
    CHECK(cooperation_fraction(ProtocolKind::kNonSelectiveFdr, p) == 1.0);
    CHECK(cooperation_fraction(ProtocolKind::kSdf, p) ==
          doctest::Approx(1.0 - p_out_sr(p)).epsilon(1e-15));
    CHECK(cooperation_fraction(ProtocolKind::kIsdf, p) ==
          doctest::Approx((1.0 - p_out_sr(p)) * p_out_sd(p)).epsilon(1e-15));

    // High rate: the direct link is almost surely in outage, so the two
    // selective policies cooperate equally often.
    const auto high = p.with_rate(8.0);
    CHECK(cooperation_fraction(ProtocolKind::kIsdf, high) ==
          doctest::Approx(cooperation_fraction(ProtocolKind::kSdf, high)).epsilon(1e-8));
  }

  TEST_CASE("conditional-sum CDF matches direct convolution quadrature") {
    RngStream rng(617, 0);
    std::vector<SystemParams> cases = {fig2_params()};
    for (int i = 0; i < 3; ++i) cases.push_back(random_params(rng));
    // One case on each side of the mean ordering plus one near-degenerate.
    cases.push_back(SystemParams::from_linear(100, 50, 5, 1, 1.0, 2.0, 20, 2));
    cases.push_back(SystemParams::from_linear(3.0, 50, 3.0 * (1 + 4e-9), 1, 1.0, 2.0, 20, 2));
    for (const auto& p : cases) {
      const double hi = p.gamma_th + 12.0 * std::max(p.pi_sd, p.relay_branch_mean());
      for (double g : log_grid(1e-3 * p.gamma_th, hi, 100)) {
        const double ref =
            oracles::conv_conditional_sum_cdf(g, p.pi_sd, p.relay_branch_mean(), p.gamma_th);
        CHECK(detail::conditional_sum_cdf(g, p) == doctest::Approx(ref).epsilon(1e-8).scale(1.0));
      }
    }
  }

  TEST_CASE("ISDF CDF matches the total-probability assembly with quadrature") {
    RngStream rng(618, 0);
    std::vector<SystemParams> cases = {fig2_params()};
    for (int i = 0; i < 3; ++i) cases.push_back(random_params(rng));
    for (const auto& p : cases) {
      const double hi = p.gamma_th + 12.0 * std::max(p.pi_sd, p.relay_branch_mean());
      for (double g : log_grid(1e-3 * p.gamma_th, hi, 100)) {
        const double ref = oracles::isdf_cdf_by_total_probability(g, p);
        CHECK(cdf_isdf(g, p) == doctest::Approx(ref).epsilon(1e-8).scale(1.0));
      }
    }
  }

  TEST_CASE("rejected ISDF tail variant is discontinuous and leaves [0, 1]") {
    const auto p = fig2_params();
    const double gth = p.gamma_th;
    const auto just_above = isdf_tail_forms(gth * (1.0 + 1e-9), p);
    // The shipped branch continues the lower branch; the variant jumps.
    CHECK(std::abs(just_above.shipped - cdf_isdf(gth, p)) < 1e-6);
    CHECK(std::abs(just_above.variant - just_above.shipped) > 1e-2);
    double worst = 0.0;
    for (double g : log_grid(gth, 100.0 * gth, 200))
      worst = std::max(worst, isdf_tail_forms(g, p).variant);
    CHECK(worst > 1.0);
  }

  TEST_CASE("extreme exponents saturate cleanly instead of producing NaN") {
    const auto p = SystemParams::from_linear(1e-8, 1e-8, 1e-8, 1e8, 1.0, 30.0, 20, 2);
    for (double g : {1e-12, 1.0, 1e12}) {
      for (double v : {cdf_dt(g, p), cdf_sdf(g, p), cdf_isdf(g, p), cdf_hypoexp(g, p),
                       pdf_sdf(g, p), pdf_isdf(g, p)}) {
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
      }
      CHECK(cdf_sdf(1e12, p) == 1.0);
      CHECK(cdf_isdf(1e12, p) == 1.0);
    }
    const auto wide = SystemParams::from_linear(1e12, 1e12, 1e-12, 1e12, 1.0, 1e-3, 20, 2);
    for (double g : {1e-14, 1.0, 1e15})
      for (double v : {cdf_sdf(g, wide), cdf_isdf(g, wide), pdf_sdf(g, wide), pdf_isdf(g, wide)})
        CHECK(std::isfinite(v));
  }

  TEST_CASE("link outage set") {
    const auto p = fig2_params();
    const auto link = LinkOutageSet::from_params(p);
    CHECK(link.p_sd == doctest::Approx(0.2711065858899754).epsilon(1e-12));
    CHECK(link.p_sr == doctest::Approx(p_out_sr(p)).epsilon(1e-15));
    CHECK(link.p_rd == doctest::Approx(-std::expm1(-p.gamma_th / 100.0)).epsilon(1e-12));
    for (double v : {link.p_sr, link.p_sd, link.p_rd}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    // Silent relay: the R->D link can never make the threshold.
    const auto silent = SystemParams::from_linear(10, 100, 100, 10, 0.0, 2.0, 20, 2);
    CHECK(LinkOutageSet::from_params(silent).p_rd == 1.0);
  }

  TEST_CASE("analytic curve validation") {
    CHECK_THROWS_AS(AnalyticCurve({1.0, 1.0}, {0.0, 0.5}, CurveKind::kCdf),
                    std::invalid_argument);
    CHECK_THROWS_AS(AnalyticCurve({1.0, 2.0}, {0.5}, CurveKind::kCdf), std::invalid_argument);
    CHECK_THROWS_AS(AnalyticCurve({1.0, 2.0}, {0.5, 0.2}, CurveKind::kCdf),
                    std::invalid_argument);
    CHECK_THROWS_AS(AnalyticCurve({1.0, 2.0}, {0.5, 1.2}, CurveKind::kCdf),
                    std::invalid_argument);
    CHECK_THROWS_AS(AnalyticCurve({1.0, 2.0}, {-0.1, 0.4}, CurveKind::kPdf),
                    std::invalid_argument);

    const auto p = fig2_params();
    const auto grid = log_grid(0.01, 100.0, 50);
    const auto curve = make_curve(ProtocolKind::kIsdf, CurveKind::kCdf, grid, p);
    CHECK(curve.values.size() == grid.size());
    CHECK_THROWS_AS(make_curve(ProtocolKind::kNonSelectiveFdr, CurveKind::kCdf, grid, p),
                    std::invalid_argument);
  }
}
