#ifndef DEEPOLY_COMMON_HPP
#define DEEPOLY_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace deepoly {

enum class ErrorCode {
  InvalidArgument,  // bad configuration or parameters
  Domain,           // input outside a function's domain
  EvalOverflow,     // intermediate value exceeded the overflow limit
  Solver,           // root finder could not locate / resolve a solution
  Degenerate,       // solver input makes the equation vacuous
  Training,         // every restart failed
  Unsupported,      // requested feature not provided (e.g. derivative order)
  Parse,            // malformed spec string or document
  Io,               // file could not be read or written
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Magnitude limit for computational-graph nodes. Anything above this is
// reported as an evaluation error instead of propagating toward infinity.
inline constexpr double kOverflowLimit = 1e300;

// Outcome of a graph evaluation. error_layer is the 1-based index of the
// first layer whose node exceeded kOverflowLimit (or went non-finite);
// -1 means success.
struct EvalResult {
  double value = 0.0;
  int error_layer = -1;
  bool ok() const { return error_layer < 0; }

  static EvalResult success(double v) { return {v, -1}; }
  static EvalResult overflow(int layer) {
    return {std::numeric_limits<double>::quiet_NaN(), layer};
  }
};

// Deterministic normal sampler (Box-Muller). std::normal_distribution's
// sequence is implementation-defined, so trained results would not be
// reproducible across standard libraries.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform();
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  // splitmix64; full-period, trivially seedable
  double next_uniform() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    // map to (0, 1]; avoids log(0)
    return (static_cast<double>(z >> 11) + 1.0) * 0x1.0p-53;
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace deepoly

#endif  // DEEPOLY_COMMON_HPP
