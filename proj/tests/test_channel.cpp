#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fdrelay/analytic.hpp"
#include "fdrelay/channel.hpp"

using namespace fdrelay;

namespace {

SystemParams make_params(double pi_sd, double pi_sr, double pi_rd, double pi_rr, double power,
                         double gamma_th) {
  return SystemParams::from_linear(pi_sd, pi_sr, pi_rd, pi_rr, power, 1.0, 20, 2)
      .with_gamma_th(gamma_th);
}

}  // namespace

TEST_SUITE("channel") {
  TEST_CASE("db conversions") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(db_to_linear(20.0) == doctest::Approx(100.0).epsilon(1e-15));
    for (double x : {-17.25, -3.0, 0.0, 4.7, 26.0})
      CHECK(linear_to_db(db_to_linear(x)) == doctest::Approx(x).epsilon(1e-13));
    CHECK_THROWS_AS(linear_to_db(0.0), std::invalid_argument);
    CHECK_THROWS_AS(linear_to_db(-1.0), std::invalid_argument);
  }

  TEST_CASE("zero RSI and silent relay make the S->R SINR a plain gain") {
    const auto no_rsi = make_params(10.0, 100.0, 100.0, 0.0, 1.0, 3.0);
    RngStream rng(11, 0);
    for (int i = 0; i < 500; ++i) {
      const auto b = sample_block(no_rsi, rng);
      CHECK(b.gamma_sr == std::norm(b.h_sr));
    }

    const auto silent = make_params(10.0, 100.0, 100.0, 10.0, 0.0, 3.0);
    RngStream rng2(11, 1);
    for (int i = 0; i < 500; ++i) {
      const auto b = sample_block(silent, rng2);
      CHECK(b.gamma_rd == 0.0);
      CHECK(b.gamma_sr == std::norm(b.h_sr));
    }
  }

  TEST_CASE("derived SNR fields are consistent with the coefficients") {
    const auto params = make_params(10.0, 100.0, 100.0, 10.0, 0.7, 3.0);
    RngStream rng(5, 9);
    for (int i = 0; i < 500; ++i) {
      const auto b = sample_block(params, rng);
      CHECK(b.gamma_sd == std::norm(b.h_sd));
      CHECK(b.gamma_rd == params.relay_power * std::norm(b.h_rd));
      CHECK(b.gamma_sr == std::norm(b.h_sr) / (params.relay_power * std::norm(b.h_rr) + 1.0));
      CHECK(std::isfinite(b.gamma_sr));
      CHECK(b.gamma_sd >= 0.0);
      CHECK(b.gamma_rd >= 0.0);
      CHECK(b.gamma_sr >= 0.0);
    }
  }

  TEST_CASE("gamma_sd sampling matches the exponential law" * doctest::timeout(60)) {
    const auto params = make_params(10.0, 100.0, 100.0, 10.0, 1.0, 3.0);
    const int n = 1000000;
    std::vector<double> samples;
    samples.reserve(n);
    RngStream rng(314159, 0);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto b = sample_block(params, rng);
      samples.push_back(b.gamma_sd);
      sum += b.gamma_sd;
    }
    CHECK(std::abs(sum / n - 10.0) < 3.0 * 10.0 / std::sqrt(static_cast<double>(n)));

    std::sort(samples.begin(), samples.end());
    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
      const double fx = -std::expm1(-samples[static_cast<std::size_t>(i)] / 10.0);
      sup = std::max(sup, std::max(fx - static_cast<double>(i) / n,
                                   static_cast<double>(i + 1) / n - fx));
    }
    CHECK(sup < 0.005);
  }

  TEST_CASE("mean channel power converges for every link") {
    const auto params = make_params(2.5, 40.0, 0.3, 7.0, 1.0, 1.0);
    const int n = 200000;
    RngStream rng(42, 2);
    double m_sd = 0, m_sr = 0, m_rd = 0, m_rr = 0;
    for (int i = 0; i < n; ++i) {
      const auto b = sample_block(params, rng);
      m_sd += std::norm(b.h_sd);
      m_sr += std::norm(b.h_sr);
      m_rd += std::norm(b.h_rd);
      m_rr += std::norm(b.h_rr);
    }
    const double root_n = std::sqrt(static_cast<double>(n));
    CHECK(std::abs(m_sd / n - params.pi_sd) < 4.0 * params.pi_sd / root_n);
    CHECK(std::abs(m_sr / n - params.pi_sr) < 4.0 * params.pi_sr / root_n);
    CHECK(std::abs(m_rd / n - params.pi_rd) < 4.0 * params.pi_rd / root_n);
    CHECK(std::abs(m_rr / n - params.pi_rr) < 4.0 * params.pi_rr / root_n);
  }

  TEST_CASE("gamma_sr marginal matches the RSI-averaged closed form") {
    const auto params = make_params(10.0, 100.0, 100.0, 10.0, 1.0, std::sqrt(10.0));
    const int n = 200000;
    RngStream rng(7, 4);
    int below = 0;
    for (int i = 0; i < n; ++i)
      below += sample_block(params, rng).gamma_sr < params.gamma_th ? 1 : 0;
    const double p = p_out_sr(params);
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    CHECK(std::abs(static_cast<double>(below) / n - p) < 4.0 * sigma);
  }

  TEST_CASE("identical (seed, stream, params) reproduces blocks bit for bit") {
    const auto params = make_params(10.0, 100.0, 100.0, 10.0, 1.0, 3.0);
    RngStream a(99, 12), b(99, 12);
    for (int i = 0; i < 200; ++i) {
      const auto ba = sample_block(params, a);
      const auto bb = sample_block(params, b);
      CHECK(ba.h_sd == bb.h_sd);
      CHECK(ba.h_sr == bb.h_sr);
      CHECK(ba.h_rd == bb.h_rd);
      CHECK(ba.h_rr == bb.h_rr);
      CHECK(ba.gamma_sr == bb.gamma_sr);
    }
  }

  TEST_CASE("link_outage threshold semantics") {
    const auto params = make_params(10.0, 100.0, 100.0, 10.0, 1.0, 1.0).with_rate(2.0);
    CHECK(params.gamma_th == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(link_outage(0.0, params));
    CHECK(link_outage(2.9, params));
    CHECK_FALSE(link_outage(3.1, params));
    CHECK_FALSE(link_outage(params.gamma_th, params));  // boundary is "no outage"
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(SystemParams::from_linear(0.0, 1, 1, 0, 1, 1, 20, 2), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams::from_linear(1, 1, 1, -0.1, 1, 1, 20, 2), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams::from_linear(1, 1, 1, 0, -1, 1, 20, 2), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams::from_linear(1, 1, 1, 0, 1, 0.0, 20, 2), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams::from_linear(1, 1, 1, 0, 1, 1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams::from_linear(1, 1, 1, 0, 1, 1, 20, 0), std::invalid_argument);
    // L not a multiple of D is allowed; only the closed-form path needs it.
    const auto p = SystemParams::from_linear(1, 1, 1, 0, 1, 1, 21, 2);
    CHECK_FALSE(p.closed_form_geometry());
  }
}
