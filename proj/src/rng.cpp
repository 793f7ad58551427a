#include "fdrelay/rng.hpp"

#include <cmath>
#include <numbers>

namespace fdrelay {

namespace {

// Philox4x64 constants (multipliers and Weyl key increments).
constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  return static_cast<std::uint64_t>(p);
}

inline void philox_round(std::array<std::uint64_t, 4>& x, const std::array<std::uint64_t, 2>& k) {
  std::uint64_t hi0, hi1;
  const std::uint64_t lo0 = mulhilo(kMul0, x[0], hi0);
  const std::uint64_t lo1 = mulhilo(kMul1, x[2], hi1);
  x[0] = hi1 ^ x[1] ^ k[0];
  x[1] = lo1;
  x[2] = hi0 ^ x[3] ^ k[1];
  x[3] = lo0;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : key_{seed, stream_id} {}

void RngStream::refill() noexcept {
  // 256-bit little-endian counter increment, then encrypt; the first block
  // uses counter = 1, matching the reference Philox stream layout.
  for (auto& c : counter_) {
    if (++c != 0) break;
  }
  std::array<std::uint64_t, 4> x = counter_;
  std::array<std::uint64_t, 2> k = key_;
  philox_round(x, k);
  for (int r = 1; r < 10; ++r) {
    k[0] += kWeyl0;
    k[1] += kWeyl1;
    philox_round(x, k);
  }
  buf_ = x;
  pos_ = 0;
}

std::uint64_t RngStream::next_u64() noexcept {
  if (pos_ >= 4) refill();
  return buf_[pos_++];
}

double RngStream::next_unit() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_unit_open() noexcept {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

void RngStream::next_gaussian_pair(double& z0, double& z1) noexcept {
  const double u1 = next_unit_open();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  z0 = r * std::cos(t);
  z1 = r * std::sin(t);
}

std::complex<double> RngStream::next_cgauss(double variance) noexcept {
  double a, b;
  next_gaussian_pair(a, b);
  const double s = std::sqrt(0.5 * variance);
  return {s * a, s * b};
}

}  // namespace fdrelay
