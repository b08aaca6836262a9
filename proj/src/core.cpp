#include "pseudofuzzy/core.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pseudofuzzy/error.hpp"

namespace pseudofuzzy {

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!std::isfinite(eps) || eps <= 0.0) {
    throw Error(ErrorCode::BadTolerance, "tolerance must be finite and > 0, got " + detail::number_text(eps));
  }
}

MembershipPair::MembershipPair(double mu, double lambda) : mu_(mu), lambda_(lambda) {
  if (!std::isfinite(mu) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::NonFinite, "membership values must be finite");
  }
  if (mu < 0.0 || mu > 1.0) {
    throw Error(ErrorCode::MuOutOfRange, "mu must lie in [0, 1], got " + detail::number_text(mu));
  }
  if (lambda < -1.0 || lambda > 0.0) {
    throw Error(ErrorCode::LambdaOutOfRange, "lambda must lie in [-1, 0], got " + detail::number_text(lambda));
  }
}

char case_letter(CaseLabel label) {
  switch (label) {
    case CaseLabel::CaseA: return 'A';
    case CaseLabel::CaseB: return 'B';
    case CaseLabel::CaseC: return 'C';
  }
  return '?';
}

MembershipPair validate_pair(double mu, double lambda) { return MembershipPair(mu, lambda); }

double magnitude_sum(const MembershipPair& pair) { return std::abs(pair.mu()) + std::abs(pair.lambda()); }

CaseLabel classify_case(const MembershipPair& pair, Tolerance tol) {
  const double s = magnitude_sum(pair);
  if (std::abs(s - 1.0) <= tol.eps()) return CaseLabel::CaseB;
  return s < 1.0 ? CaseLabel::CaseA : CaseLabel::CaseC;
}

bool is_dependent_pair(const MembershipPair& pair, Tolerance tol) {
  return std::abs(magnitude_sum(pair) - 1.0) <= tol.eps();
}

DiscretePseudoFuzzySet::DiscretePseudoFuzzySet(std::vector<PseudoFuzzyElement> elements)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const double x = elements_[i].x;
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::NonFinite, "element " + std::to_string(i) + ": x must be finite", i);
    }
    if (i == 0) continue;
    const double prev = elements_[i - 1].x;
    if (x == prev) {
      throw Error(ErrorCode::DuplicateSupportPoint,
                  "element " + std::to_string(i) + ": duplicate x = " + detail::number_text(x), i);
    }
    if (x < prev) {
      throw Error(ErrorCode::UnsortedSupport,
                  "element " + std::to_string(i) + ": x values must be strictly increasing", i);
    }
  }
}

DiscretePseudoFuzzySet validate_set(std::span<const RawTriplet> candidates) {
  std::vector<PseudoFuzzyElement> elements;
  elements.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& t = candidates[i];
    try {
      elements.push_back({t.x, MembershipPair(t.mu, t.lambda)});
    } catch (const Error& e) {
      throw Error(e.code(), "element " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return DiscretePseudoFuzzySet(std::move(elements));
}

DiscretePseudoFuzzySet validate_set(std::vector<PseudoFuzzyElement> elements) {
  return DiscretePseudoFuzzySet(std::move(elements));
}

}  // namespace pseudofuzzy
