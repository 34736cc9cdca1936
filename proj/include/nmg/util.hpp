#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace nmg {

using cplx = std::complex<double>;

// Global default comparison tolerance; every operation that compares floats
// takes an eps parameter defaulting to this.
inline constexpr double kDefaultEps = 1e-9;

inline constexpr std::uint64_t kDefaultSeed = 0xBEA71;

// Caps shared across modules.
inline constexpr int kDefaultGroupCap = 5040;
inline constexpr int kDefaultClosureCap = 10000;
inline constexpr int kDefaultIdempotentEnumCap = 16;

enum class errc {
  parse_error,
  size_cap,
  closure_cap,
  group_mismatch,
  unsupported,
  bad_weight,
  zero_element,
  nonabelian,
  not_idempotent,
  not_norm_one,
  inconsistent_structure,
  not_nm,
  not_a_group,
  inconsistent_images,
  not_generating,
  no_extension,
  not_positive,
  not_bijective,
  recomposition_mismatch,
  io_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  errc code;
  Error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

// e^{2*pi*i*num/den}. The single place where integer character exponents
// become floating-point values.
cplx root_of_unity(long long num, long long den);

// |a - b| <= max(eps, eps*|a|), the relative norm-equality test.
inline bool norm_eq(double a, double b, double eps) {
  return std::abs(a - b) <= std::max(eps, eps * std::abs(a));
}

inline bool approx(cplx a, cplx b, double eps) { return std::abs(a - b) <= eps; }

// Deterministic seeded RNG. mt19937_64 output is fully specified by the
// standard; the derived distributions below avoid the implementation-defined
// std:: distribution objects.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  int below(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(eng_()) *
                             static_cast<unsigned __int128>(n)) >>
                            64);
  }

  cplx complex_in_box(double radius = 1.0) {
    return {uniform(-radius, radius), uniform(-radius, radius)};
  }

 private:
  std::mt19937_64 eng_;
};

// Round to 12 decimal digits and normalize -0; used to build hashable keys
// for float-coefficient orbit membership.
inline long long quantize12(double x) {
  long long v = std::llround(x * 1e12);
  return v == 0 ? 0 : v;
}

}  // namespace nmg
