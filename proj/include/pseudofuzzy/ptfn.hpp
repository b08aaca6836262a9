#pragma once

#include <optional>
#include <string_view>

#include "pseudofuzzy/core.hpp"

namespace pseudofuzzy {

/// Left foot, peak and right foot of a triangle: a <= b <= c and a < c.
/// A side of zero width (a == b or b == c) evaluates as a step.
class TriangleShape {
 public:
  TriangleShape(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double width() const noexcept { return c_ - a_; }

  friend bool operator==(const TriangleShape&, const TriangleShape&) = default;

 private:
  double a_;
  double b_;
  double c_;
};

/// Dependent: lambda = mu - 1 everywhere. Independent: lambda = -mu.
enum class Kind { Dependent, Independent };

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view text);

/// Closed interval [lo, hi], lo <= hi.
class Interval {
 public:
  Interval(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const noexcept { return lo_ <= other.lo_ && other.hi_ <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

/// Pseudo triangular fuzzy number.
class PseudoTfn {
 public:
  PseudoTfn(TriangleShape shape, Kind kind) : shape_(shape), kind_(kind) {}

  const TriangleShape& shape() const noexcept { return shape_; }
  Kind kind() const noexcept { return kind_; }

  friend bool operator==(const PseudoTfn&, const PseudoTfn&) = default;

 private:
  TriangleShape shape_;
  Kind kind_;
};

double mu_at(const PseudoTfn& p, double x);
double lambda_at(const PseudoTfn& p, double x);
MembershipPair pair_at(const PseudoTfn& p, double x);

/// {x : mu(x) >= alpha}, the closure [a, c] at alpha = 0.
Interval alpha_cut_mu(const PseudoTfn& p, double alpha);

/// Level set of lambda. Dependent numbers return {x : lambda(x) >= beta};
/// independent numbers return {x : lambda(x) <= beta}.
Interval beta_cut_lambda(const PseudoTfn& p, double beta);

/// Crisp point of the double parametric form: r selects the alpha-cut,
/// s sweeps it from its lower to its upper end.
double parametric_point(const PseudoTfn& p, double r, double s);

/// n equally spaced samples over [xmin, xmax], both ends included.
DiscretePseudoFuzzySet discretize(const PseudoTfn& p, int n, double xmin, double xmax);

/// First sample whose pair breaks the identity of `kind`, if any.
std::optional<double> first_kind_violation(const DiscretePseudoFuzzySet& samples, Kind kind,
                                           Tolerance tol = Tolerance{});

/// Checks the kind identity on `grid` samples spanning one support width
/// beyond each foot.
bool verify_kind(const PseudoTfn& p, int grid, Tolerance tol = Tolerance{});
std::optional<double> find_kind_violation(const PseudoTfn& p, int grid, Tolerance tol = Tolerance{});

}  // namespace pseudofuzzy
