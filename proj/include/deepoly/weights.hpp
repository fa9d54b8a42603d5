#ifndef DEEPOLY_WEIGHTS_HPP
#define DEEPOLY_WEIGHTS_HPP

#include <functional>
#include <string>
#include <string_view>

#include "deepoly/common.hpp"

namespace deepoly {

// External field Q(x) = c*|x|^n with c > 0, n > 1. The associated even
// weight is exp(-Q).
struct FieldSpec {
  double c = 1.0;
  double n = 2.0;

  double q(double x) const;        // c*|x|^n
  double q_prime(double x) const;  // d/dx on (0, inf), extended oddly
  void validate() const;           // throws InvalidArgument
};

enum class WeightKind {
  Constant,            // w == 1
  OneSidedGaussian,    // 1 for x < 0, exp(-x^2) for x >= 0
  OneSidedReciprocal,  // 1 for x < 0, 1/(x+1) for x >= 0
  Freud,               // exp(-|x|^lambda), lambda >= 1, even
  EvenField,           // exp(-c*|x|^n), even
  OneSidedField,       // 1 for x < 0, exp(-c*x^n) for x >= 0
};

// Which branch of a piecewise weight to differentiate at the interface.
enum class Side { Left, Right };

// Immutable weight function w: R -> (0, 1].
class Weight {
 public:
  static Weight constant();
  static Weight gauss_right();
  static Weight recip_right();
  static Weight freud(double lambda);
  static Weight even_field(FieldSpec field);
  static Weight field_right(FieldSpec field);

  // Accepts "const", "gauss-right", "recip-right", "freud:<lambda>",
  // "field:<c>:<n>", "field-right:<c>:<n>".
  static Weight parse(std::string_view spec);
  std::string spec_string() const;

  WeightKind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  const FieldSpec& field() const { return field_; }

  double eval(double x) const;

  // w(x)^gamma, evaluated in log space for the exponential kinds so the
  // power does not underflow before the true value does.
  double eval_pow(double gamma, double x) const;

  // Closed-form branch derivative, order in {0, 1, 2}. `side` selects the
  // branch at x = 0 for the one-sided kinds (value-identical, derivative
  // branches differ).
  double derivative(double x, int order, Side side = Side::Left) const;

  bool decays() const;  // false only for Constant

 private:
  Weight(WeightKind kind, double lambda, FieldSpec field)
      : kind_(kind), lambda_(lambda), field_(field) {}

  WeightKind kind_ = WeightKind::Constant;
  double lambda_ = 0.0;
  FieldSpec field_{};
};

struct AdmissibilityReport {
  bool condition_a = false;  // Q' exists and is positive on (0, inf)
  bool condition_b = false;  // x Q'(x) strictly increasing, limit 0 at 0+
  bool condition_c = false;  // x Q'(x)/Q(x) approaches a constant
  double ratio_limit = 0.0;
  bool all_pass() const { return condition_a && condition_b && condition_c; }
};

// Analytic check for the power family Q = c*|x|^n.
AdmissibilityReport check_field_admissibility(const FieldSpec& field);

// Sampled check for a general field, probed on a log-spaced grid over
// [1e-6, 1e6]. Throws Error(Domain) if Q is not evaluable on the grid.
AdmissibilityReport check_field_admissibility(
    const std::function<double(double)>& q,
    const std::function<double(double)>& q_prime);

}  // namespace deepoly

#endif  // DEEPOLY_WEIGHTS_HPP
