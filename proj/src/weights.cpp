#include "deepoly/weights.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <vector>

namespace deepoly {

double FieldSpec::q(double x) const { return c * std::pow(std::abs(x), n); }

double FieldSpec::q_prime(double x) const {
  double ax = std::abs(x);
  double d = c * n * std::pow(ax, n - 1.0);
  return x < 0 ? -d : d;
}

void FieldSpec::validate() const {
  if (!(c > 0.0) || !std::isfinite(c))
    throw Error(ErrorCode::InvalidArgument, "field: c must be positive");
  if (!(n > 1.0) || !std::isfinite(n))
    throw Error(ErrorCode::InvalidArgument, "field: n must exceed 1");
}

Weight Weight::constant() { return Weight(WeightKind::Constant, 0.0, {}); }
Weight Weight::gauss_right() { return Weight(WeightKind::OneSidedGaussian, 0.0, {}); }
Weight Weight::recip_right() { return Weight(WeightKind::OneSidedReciprocal, 0.0, {}); }

Weight Weight::freud(double lambda) {
  if (!(lambda >= 1.0) || !std::isfinite(lambda))
    throw Error(ErrorCode::InvalidArgument, "freud: lambda must be >= 1");
  return Weight(WeightKind::Freud, lambda, {});
}

Weight Weight::even_field(FieldSpec field) {
  field.validate();
  return Weight(WeightKind::EvenField, 0.0, field);
}

Weight Weight::field_right(FieldSpec field) {
  field.validate();
  return Weight(WeightKind::OneSidedField, 0.0, field);
}

namespace {

double parse_real(std::string_view s, const char* what) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw Error(ErrorCode::Parse, std::string("weight: bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    if (pos == std::string_view::npos) {
      out.push_back(s);
      return out;
    }
    out.push_back(s.substr(0, pos));
    s.remove_prefix(pos + 1);
  }
}

std::string format_real(double v) {
  char buf[32];
  snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Weight Weight::parse(std::string_view spec) {
  if (spec == "const") return constant();
  if (spec == "gauss-right") return gauss_right();
  if (spec == "recip-right") return recip_right();
  auto parts = split(spec, ':');
  if (parts[0] == "freud" && parts.size() == 2)
    return freud(parse_real(parts[1], "lambda"));
  if (parts[0] == "field" && parts.size() == 3)
    return even_field({parse_real(parts[1], "c"), parse_real(parts[2], "n")});
  if (parts[0] == "field-right" && parts.size() == 3)
    return field_right({parse_real(parts[1], "c"), parse_real(parts[2], "n")});
  throw Error(ErrorCode::Parse, "unknown weight spec '" + std::string(spec) + "'");
}

std::string Weight::spec_string() const {
  switch (kind_) {
    case WeightKind::Constant: return "const";
    case WeightKind::OneSidedGaussian: return "gauss-right";
    case WeightKind::OneSidedReciprocal: return "recip-right";
    case WeightKind::Freud: return "freud:" + format_real(lambda_);
    case WeightKind::EvenField:
      return "field:" + format_real(field_.c) + ":" + format_real(field_.n);
    case WeightKind::OneSidedField:
      return "field-right:" + format_real(field_.c) + ":" + format_real(field_.n);
  }
  return "const";
}

double Weight::eval(double x) const {
  switch (kind_) {
    case WeightKind::Constant: return 1.0;
    case WeightKind::OneSidedGaussian: return x < 0 ? 1.0 : std::exp(-x * x);
    case WeightKind::OneSidedReciprocal: return x < 0 ? 1.0 : 1.0 / (x + 1.0);
    case WeightKind::Freud: return std::exp(-std::pow(std::abs(x), lambda_));
    case WeightKind::EvenField: return std::exp(-field_.q(x));
    case WeightKind::OneSidedField: return x < 0 ? 1.0 : std::exp(-field_.q(x));
  }
  return 1.0;
}

double Weight::eval_pow(double gamma, double x) const {
  if (gamma == 0.0) return 1.0;
  switch (kind_) {
    case WeightKind::Constant: return 1.0;
    case WeightKind::OneSidedGaussian:
      return x < 0 ? 1.0 : std::exp(-gamma * x * x);
    case WeightKind::OneSidedReciprocal:
      return x < 0 ? 1.0 : std::pow(x + 1.0, -gamma);
    case WeightKind::Freud:
      return std::exp(-gamma * std::pow(std::abs(x), lambda_));
    case WeightKind::EvenField: return std::exp(-gamma * field_.q(x));
    case WeightKind::OneSidedField:
      return x < 0 ? 1.0 : std::exp(-gamma * field_.q(x));
  }
  return 1.0;
}

namespace {

// Branch derivatives of exp(-Q) given Q' and Q'' of the decaying branch.
double exp_branch_derivative(double w, double qp, double qpp, int order) {
  if (order == 1) return -qp * w;
  return (qp * qp - qpp) * w;
}

}  // namespace

double Weight::derivative(double x, int order, Side side) const {
  if (order < 0 || order > 2)
    throw Error(ErrorCode::Unsupported, "weight derivative order must be 0, 1, or 2");
  if (order == 0) {
    // at the interface both branches evaluate to the same value
    return eval(x);
  }
  bool left_branch = x < 0 || (x == 0 && side == Side::Left);
  switch (kind_) {
    case WeightKind::Constant:
      return 0.0;
    case WeightKind::OneSidedGaussian: {
      if (left_branch) return 0.0;
      double w = std::exp(-x * x);
      return order == 1 ? -2.0 * x * w : (4.0 * x * x - 2.0) * w;
    }
    case WeightKind::OneSidedReciprocal: {
      if (left_branch) return 0.0;
      double s = x + 1.0;
      return order == 1 ? -1.0 / (s * s) : 2.0 / (s * s * s);
    }
    case WeightKind::Freud: {
      double ax = std::abs(x);
      double w = std::exp(-std::pow(ax, lambda_));
      double qp = lambda_ * std::pow(ax, lambda_ - 1.0);
      double qpp = lambda_ * (lambda_ - 1.0) * std::pow(ax, lambda_ - 2.0);
      double d = exp_branch_derivative(w, qp, qpp, order);
      return (x < 0 && order == 1) ? -d : d;
    }
    case WeightKind::EvenField: {
      double ax = std::abs(x);
      double w = std::exp(-field_.q(x));
      double qp = field_.c * field_.n * std::pow(ax, field_.n - 1.0);
      double qpp = field_.c * field_.n * (field_.n - 1.0) * std::pow(ax, field_.n - 2.0);
      double d = exp_branch_derivative(w, qp, qpp, order);
      return (x < 0 && order == 1) ? -d : d;
    }
    case WeightKind::OneSidedField: {
      if (left_branch) return 0.0;
      double w = std::exp(-field_.q(x));
      double qp = field_.c * field_.n * std::pow(x, field_.n - 1.0);
      double qpp = field_.c * field_.n * (field_.n - 1.0) * std::pow(x, field_.n - 2.0);
      return exp_branch_derivative(w, qp, qpp, order);
    }
  }
  return 0.0;
}

bool Weight::decays() const { return kind_ != WeightKind::Constant; }

AdmissibilityReport check_field_admissibility(const FieldSpec& field) {
  field.validate();
  AdmissibilityReport r;
  // Q'(x) = c n x^(n-1) > 0 on (0, inf) since c > 0, n > 1.
  r.condition_a = field.c > 0.0 && field.n > 0.0;
  // x Q'(x) = c n x^n, strictly increasing with limit 0 at 0+ for n > 0.
  r.condition_b = field.n > 0.0;
  // x Q'(x) / Q(x) == n identically.
  r.condition_c = true;
  r.ratio_limit = field.n;
  return r;
}

AdmissibilityReport check_field_admissibility(
    const std::function<double(double)>& q,
    const std::function<double(double)>& q_prime) {
  // 97 log-spaced probes over [1e-6, 1e6]
  constexpr int kProbes = 97;
  std::vector<double> xs(kProbes), xqp(kProbes), ratio(kProbes);
  for (int i = 0; i < kProbes; ++i) {
    double t = -6.0 + 12.0 * i / (kProbes - 1);
    xs[i] = std::pow(10.0, t);
  }
  AdmissibilityReport r;
  r.condition_a = true;
  for (int i = 0; i < kProbes; ++i) {
    double qv = q(xs[i]);
    double qp = q_prime(xs[i]);
    if (!std::isfinite(qv) || !std::isfinite(qp))
      throw Error(ErrorCode::Domain, "field admissibility: Q not evaluable on probe grid");
    if (!(qp > 0.0)) r.condition_a = false;
    xqp[i] = xs[i] * qp;
    ratio[i] = qv != 0.0 ? xqp[i] / qv : std::numeric_limits<double>::infinity();
  }
  r.condition_b = xqp[0] < 1e-3;  // limit 0 at 0+ (sampled at x = 1e-6)
  for (int i = 1; i < kProbes; ++i)
    if (!(xqp[i] > xqp[i - 1])) r.condition_b = false;
  // ratio must settle to a constant over the top decade of probes
  const int tail = 9;
  double lo = ratio[kProbes - tail], hi = lo;
  for (int i = kProbes - tail; i < kProbes; ++i) {
    lo = std::min(lo, ratio[i]);
    hi = std::max(hi, ratio[i]);
  }
  double mid = 0.5 * (lo + hi);
  r.condition_c = std::isfinite(mid) && (hi - lo) <= 1e-3 * std::max(1.0, std::abs(mid));
  r.ratio_limit = mid;
  return r;
}

}  // namespace deepoly
