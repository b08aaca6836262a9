#pragma once

#include <span>
#include <vector>

namespace pseudofuzzy {

inline constexpr double kDefaultEps = 1e-9;

/// Absolute comparison tolerance. Always strictly positive.
class Tolerance {
 public:
  explicit Tolerance(double eps = kDefaultEps);
  double eps() const noexcept { return eps_; }

 private:
  double eps_;
};

/// Positive membership mu in [0, 1] together with negative membership
/// lambda in [-1, 0]. Instances are always valid; construction throws
/// otherwise.
class MembershipPair {
 public:
  MembershipPair(double mu, double lambda);

  double mu() const noexcept { return mu_; }
  double lambda() const noexcept { return lambda_; }

  friend bool operator==(const MembershipPair&, const MembershipPair&) = default;

 private:
  double mu_;
  double lambda_;
};

/// Magnitude-sum classes. The ordering A < B < C follows |mu| + |lambda|.
enum class CaseLabel { CaseA, CaseB, CaseC };

char case_letter(CaseLabel label);

MembershipPair validate_pair(double mu, double lambda);

/// |mu| + |lambda|, always in [0, 2].
double magnitude_sum(const MembershipPair& pair);

/// Sums within eps of 1 are CaseB; below that band CaseA, above it CaseC.
CaseLabel classify_case(const MembershipPair& pair, Tolerance tol = Tolerance{});

bool is_dependent_pair(const MembershipPair& pair, Tolerance tol = Tolerance{});

struct PseudoFuzzyElement {
  double x;
  MembershipPair pair;

  friend bool operator==(const PseudoFuzzyElement&, const PseudoFuzzyElement&) = default;
};

/// Unvalidated (x, mu, lambda) triplet, e.g. as read from a file.
struct RawTriplet {
  double x;
  double mu;
  double lambda;
};

/// Finite sample of a pseudo fuzzy set: elements ordered by strictly
/// increasing x.
class DiscretePseudoFuzzySet {
 public:
  DiscretePseudoFuzzySet() = default;
  explicit DiscretePseudoFuzzySet(std::vector<PseudoFuzzyElement> elements);

  std::span<const PseudoFuzzyElement> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const PseudoFuzzyElement& operator[](std::size_t i) const { return elements_[i]; }

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

 private:
  std::vector<PseudoFuzzyElement> elements_;
};

DiscretePseudoFuzzySet validate_set(std::span<const RawTriplet> candidates);
DiscretePseudoFuzzySet validate_set(std::vector<PseudoFuzzyElement> elements);

}  // namespace pseudofuzzy
