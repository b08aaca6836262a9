#include "pseudofuzzy/ptfn.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pseudofuzzy/error.hpp"

namespace pseudofuzzy {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, std::string(what) + " must be finite");
}

void require_unit(double v, ErrorCode code, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(code, std::string(what) + " must lie in [0, 1], got " + detail::number_text(v));
  }
}

}  // namespace

TriangleShape::TriangleShape(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorCode::BadShape, "triangle feet and peak must be finite");
  }
  if (!(a <= b && b <= c)) {
    throw Error(ErrorCode::BadShape, "triangle requires a <= b <= c");
  }
  if (!(a < c)) {
    throw Error(ErrorCode::BadShape, "triangle requires a < c (zero-width triangle)");
  }
}

std::string_view to_string(Kind kind) {
  return kind == Kind::Dependent ? "dependent" : "independent";
}

std::optional<Kind> parse_kind(std::string_view text) {
  if (text == "dependent") return Kind::Dependent;
  if (text == "independent") return Kind::Independent;
  return std::nullopt;
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error(ErrorCode::NonFinite, "interval bounds must be finite");
  if (!(lo <= hi)) throw Error(ErrorCode::BadInterval, "interval requires lo <= hi");
}

double mu_at(const PseudoTfn& p, double x) {
  require_finite(x, "x");
  const auto& s = p.shape();
  if (x < s.a() || x > s.c()) return 0.0;
  if (x < s.b()) return (x - s.a()) / (s.b() - s.a());
  if (x == s.b()) return 1.0;
  return (s.c() - x) / (s.c() - s.b());
}

double lambda_at(const PseudoTfn& p, double x) {
  require_finite(x, "x");
  const auto& s = p.shape();
  const double a = s.a(), b = s.b(), c = s.c();
  if (p.kind() == Kind::Dependent) {
    if (x < a || x > c) return -1.0;
    if (x < b) return (x - b) / (b - a);
    if (x == b) return 0.0;
    return (b - x) / (c - b);
  }
  if (x < a || x > c) return 0.0;
  if (x < b) return (a - x) / (b - a);
  if (x == b) return -1.0;
  return (x - c) / (c - b);
}

MembershipPair pair_at(const PseudoTfn& p, double x) { return MembershipPair(mu_at(p, x), lambda_at(p, x)); }

Interval alpha_cut_mu(const PseudoTfn& p, double alpha) {
  require_unit(alpha, ErrorCode::AlphaOutOfRange, "alpha");
  const auto& s = p.shape();
  if (alpha == 1.0) return {s.b(), s.b()};
  const double lo = std::min(s.b(), s.a() + alpha * (s.b() - s.a()));
  const double hi = std::max(s.b(), s.c() - alpha * (s.c() - s.b()));
  return {lo, hi};
}

Interval beta_cut_lambda(const PseudoTfn& p, double beta) {
  if (!(beta >= -1.0 && beta <= 0.0)) {
    throw Error(ErrorCode::BetaOutOfRange, "beta must lie in [-1, 0], got " + detail::number_text(beta));
  }
  if (p.kind() == Kind::Independent) return alpha_cut_mu(p, -beta);

  const auto& s = p.shape();
  if (beta == 0.0) return {s.b(), s.b()};
  if (beta == -1.0) return {s.a(), s.c()};
  const double lo = std::clamp(s.b() + beta * (s.b() - s.a()), s.a(), s.b());
  const double hi = std::clamp(s.b() - beta * (s.c() - s.b()), s.b(), s.c());
  return {lo, hi};
}

double parametric_point(const PseudoTfn& p, double r, double s) {
  require_unit(r, ErrorCode::ParamOutOfRange, "r");
  require_unit(s, ErrorCode::ParamOutOfRange, "s");
  if (r == 1.0) return p.shape().b();
  const Interval cut = alpha_cut_mu(p, r);
  return std::lerp(cut.lo(), cut.hi(), s);
}

DiscretePseudoFuzzySet discretize(const PseudoTfn& p, int n, double xmin, double xmax) {
  if (n < 2) throw Error(ErrorCode::BadCount, "sample count must be >= 2, got " + std::to_string(n));
  if (!std::isfinite(xmin) || !std::isfinite(xmax) || !(xmin < xmax)) {
    throw Error(ErrorCode::BadRange, "sample range requires finite xmin < xmax");
  }
  std::vector<PseudoFuzzyElement> elements;
  elements.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    const double x = std::lerp(xmin, xmax, t);
    elements.push_back({x, pair_at(p, x)});
  }
  try {
    return DiscretePseudoFuzzySet(std::move(elements));
  } catch (const Error&) {
    throw Error(ErrorCode::BadRange, "sample range too narrow for the requested count");
  }
}

std::optional<double> first_kind_violation(const DiscretePseudoFuzzySet& samples, Kind kind, Tolerance tol) {
  for (const auto& e : samples) {
    const double residual = kind == Kind::Dependent ? magnitude_sum(e.pair) - 1.0 : e.pair.lambda() + e.pair.mu();
    if (!(std::abs(residual) <= tol.eps())) return e.x;
  }
  return std::nullopt;
}

std::optional<double> find_kind_violation(const PseudoTfn& p, int grid, Tolerance tol) {
  if (grid < 2) throw Error(ErrorCode::BadCount, "grid must be >= 2, got " + std::to_string(grid));
  const auto& s = p.shape();
  const auto samples = discretize(p, grid, s.a() - s.width(), s.c() + s.width());
  return first_kind_violation(samples, p.kind(), tol);
}

bool verify_kind(const PseudoTfn& p, int grid, Tolerance tol) { return !find_kind_violation(p, grid, tol); }

}  // namespace pseudofuzzy
