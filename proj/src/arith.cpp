#include "pseudofuzzy/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pseudofuzzy/error.hpp"

namespace pseudofuzzy {

namespace {

void require_same_kind(const PseudoTfn& p, const PseudoTfn& q) {
  if (p.kind() != q.kind()) {
    throw Error(ErrorCode::KindMismatch, "operands must share a kind (got " + std::string(to_string(p.kind())) +
                                             " and " + std::string(to_string(q.kind())) + ")");
  }
}

void require_levels(int levels) {
  if (levels < 2) throw Error(ErrorCode::BadCount, "levels must be >= 2, got " + std::to_string(levels));
}

void require_divisor(const PseudoTfn& q) {
  const auto& s = q.shape();
  if (s.a() <= 0.0 && 0.0 <= s.c()) {
    throw Error(ErrorCode::DivisorStraddlesZero, "divisor support [a, c] must exclude zero");
  }
}

Interval interval_mul(const Interval& x, const Interval& y) {
  const double p1 = x.lo() * y.lo();
  const double p2 = x.lo() * y.hi();
  const double p3 = x.hi() * y.lo();
  const double p4 = x.hi() * y.hi();
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

// y must exclude zero.
Interval interval_div(const Interval& x, const Interval& y) {
  const double q1 = x.lo() / y.lo();
  const double q2 = x.lo() / y.hi();
  const double q3 = x.hi() / y.lo();
  const double q4 = x.hi() / y.hi();
  return {std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4})};
}

template <typename IntervalOp>
CutTable levelwise(const PseudoTfn& p, const PseudoTfn& q, int levels, IntervalOp op) {
  std::vector<CutRow> rows;
  for (double alpha : level_grid(levels)) {
    rows.push_back({alpha, op(alpha_cut_mu(p, alpha), alpha_cut_mu(q, alpha))});
  }
  return CutTable(std::move(rows), p.kind());
}

struct Samples {
  std::vector<double> x;
  std::vector<double> mu;
};

Samples sample_support(const PseudoTfn& p, int grid) {
  const auto& s = p.shape();
  Samples out;
  out.x.reserve(static_cast<std::size_t>(grid) + 2);
  bool has_peak = false;
  for (int i = 0; i <= grid; ++i) {
    const double x = std::lerp(s.a(), s.c(), static_cast<double>(i) / grid);
    has_peak = has_peak || x == s.b();
    out.x.push_back(x);
  }
  if (!has_peak) out.x.push_back(s.b());
  out.mu.reserve(out.x.size());
  for (double x : out.x) out.mu.push_back(mu_at(p, x));
  return out;
}

// Accumulates (value, membership) contributions into per-level extrema.
class LevelAccumulator {
 public:
  explicit LevelAccumulator(int levels)
      : alphas_(level_grid(levels)),
        lo_(alphas_.size(), std::numeric_limits<double>::infinity()),
        hi_(alphas_.size(), -std::numeric_limits<double>::infinity()) {}

  void add(double value, double membership) {
    const auto it = std::upper_bound(alphas_.begin(), alphas_.end(), membership);
    if (it == alphas_.begin()) return;
    const auto top = static_cast<std::size_t>(it - alphas_.begin()) - 1;
    lo_[top] = std::min(lo_[top], value);
    hi_[top] = std::max(hi_[top], value);
  }

  CutTable finish(Kind kind) {
    for (std::size_t j = alphas_.size() - 1; j-- > 0;) {
      lo_[j] = std::min(lo_[j], lo_[j + 1]);
      hi_[j] = std::max(hi_[j], hi_[j + 1]);
    }
    std::vector<CutRow> rows;
    rows.reserve(alphas_.size());
    for (std::size_t j = 0; j < alphas_.size(); ++j) {
      if (!(lo_[j] <= hi_[j])) {
        throw Error(ErrorCode::BadCutTable, "no sample reaches level " + detail::number_text(alphas_[j]));
      }
      rows.push_back({alphas_[j], Interval(lo_[j], hi_[j])});
    }
    return CutTable(std::move(rows), kind);
  }

 private:
  std::vector<double> alphas_;
  std::vector<double> lo_;
  std::vector<double> hi_;
};

void require_oracle_grid(int grid) {
  if (grid < 16) throw Error(ErrorCode::BadCount, "oracle grid must be >= 16, got " + std::to_string(grid));
}

}  // namespace

CutTable::CutTable(std::vector<CutRow> rows, Kind kind) : rows_(std::move(rows)), kind_(kind) {
  if (rows_.size() < 2) throw Error(ErrorCode::BadCutTable, "cut table needs at least two rows");
  if (rows_.front().alpha != 0.0 || rows_.back().alpha != 1.0) {
    throw Error(ErrorCode::BadCutTable, "cut table levels must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (!(rows_[i].alpha > rows_[i - 1].alpha)) {
      throw Error(ErrorCode::BadCutTable, "cut table levels must be strictly increasing", i);
    }
    if (!rows_[i - 1].interval.contains(rows_[i].interval)) {
      throw Error(ErrorCode::BadCutTable, "cut table intervals must be nested", i);
    }
  }
}

std::string_view to_string(BinaryOpCode op) {
  switch (op) {
    case BinaryOpCode::Add: return "add";
    case BinaryOpCode::Sub: return "sub";
    case BinaryOpCode::Mul: return "mul";
    case BinaryOpCode::Div: return "div";
  }
  return "?";
}

std::vector<double> level_grid(int levels) {
  require_levels(levels);
  std::vector<double> alphas;
  alphas.reserve(static_cast<std::size_t>(levels));
  for (int i = 0; i < levels; ++i) alphas.push_back(static_cast<double>(i) / (levels - 1));
  return alphas;
}

PseudoTfn add(const PseudoTfn& p, const PseudoTfn& q) {
  require_same_kind(p, q);
  const auto& s = p.shape();
  const auto& t = q.shape();
  return {TriangleShape(s.a() + t.a(), s.b() + t.b(), s.c() + t.c()), p.kind()};
}

PseudoTfn sub(const PseudoTfn& p, const PseudoTfn& q) {
  require_same_kind(p, q);
  const auto& s = p.shape();
  const auto& t = q.shape();
  return {TriangleShape(s.a() - t.c(), s.b() - t.b(), s.c() - t.a()), p.kind()};
}

PseudoTfn scale(const PseudoTfn& p, double k) {
  if (!std::isfinite(k)) throw Error(ErrorCode::NonFinite, "scale factor must be finite");
  if (k == 0.0) throw Error(ErrorCode::ZeroScale, "scale factor must be non-zero");
  const auto& s = p.shape();
  if (k > 0.0) return {TriangleShape(k * s.a(), k * s.b(), k * s.c()), p.kind()};
  return {TriangleShape(k * s.c(), k * s.b(), k * s.a()), p.kind()};
}

CutTable cut_table(const PseudoTfn& p, int levels) {
  std::vector<CutRow> rows;
  for (double alpha : level_grid(levels)) rows.push_back({alpha, alpha_cut_mu(p, alpha)});
  return CutTable(std::move(rows), p.kind());
}

CutTable mul(const PseudoTfn& p, const PseudoTfn& q, int levels) {
  require_same_kind(p, q);
  require_levels(levels);
  return levelwise(p, q, levels, interval_mul);
}

CutTable div(const PseudoTfn& p, const PseudoTfn& q, int levels) {
  require_same_kind(p, q);
  require_divisor(q);
  require_levels(levels);
  return levelwise(p, q, levels, interval_div);
}

CutTable extension_oracle(const PseudoTfn& p, const PseudoTfn& q, BinaryOpCode op, int grid_per_operand,
                          int levels) {
  require_same_kind(p, q);
  if (op == BinaryOpCode::Div) require_divisor(q);
  require_levels(levels);
  require_oracle_grid(grid_per_operand);

  const Samples xs = sample_support(p, grid_per_operand);
  const Samples ys = sample_support(q, grid_per_operand);
  LevelAccumulator acc(levels);
  for (std::size_t i = 0; i < xs.x.size(); ++i) {
    const double x = xs.x[i];
    for (std::size_t j = 0; j < ys.x.size(); ++j) {
      const double y = ys.x[j];
      double v = 0.0;
      switch (op) {
        case BinaryOpCode::Add: v = x + y; break;
        case BinaryOpCode::Sub: v = x - y; break;
        case BinaryOpCode::Mul: v = x * y; break;
        case BinaryOpCode::Div: v = x / y; break;
      }
      acc.add(v, std::min(xs.mu[i], ys.mu[j]));
    }
  }
  return acc.finish(p.kind());
}

CutTable extension_oracle_scale(const PseudoTfn& p, double k, int grid_per_operand, int levels) {
  if (!std::isfinite(k)) throw Error(ErrorCode::NonFinite, "scale factor must be finite");
  if (k == 0.0) throw Error(ErrorCode::ZeroScale, "scale factor must be non-zero");
  require_levels(levels);
  require_oracle_grid(grid_per_operand);

  const Samples xs = sample_support(p, grid_per_operand);
  LevelAccumulator acc(levels);
  for (std::size_t i = 0; i < xs.x.size(); ++i) acc.add(k * xs.x[i], xs.mu[i]);
  return acc.finish(p.kind());
}

double max_endpoint_deviation(const CutTable& lhs, const CutTable& rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorCode::BadCutTable, "tables have different level counts");
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].alpha != rhs[i].alpha) throw Error(ErrorCode::BadCutTable, "tables use different levels", i);
    worst = std::max({worst, std::abs(lhs[i].interval.lo() - rhs[i].interval.lo()),
                      std::abs(lhs[i].interval.hi() - rhs[i].interval.hi())});
  }
  return worst;
}

MembershipPair lambda_of_result(const CutTable& table, double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "x must be finite");
  const auto rows = table.rows();

  double mu = 0.0;
  if (rows.front().interval.contains(x)) {
    std::size_t top = 0;
    while (top + 1 < rows.size() && rows[top + 1].interval.contains(x)) ++top;
    if (top + 1 == rows.size()) {
      mu = 1.0;
    } else {
      const auto& below = rows[top];
      const auto& above = rows[top + 1];
      // x lies in `below` but left or right of `above`.
      double t = 0.0;
      if (x < above.interval.lo()) {
        t = (x - below.interval.lo()) / (above.interval.lo() - below.interval.lo());
      } else {
        t = (below.interval.hi() - x) / (below.interval.hi() - above.interval.hi());
      }
      mu = std::clamp(below.alpha + std::clamp(t, 0.0, 1.0) * (above.alpha - below.alpha), 0.0, 1.0);
    }
  }
  const double lambda = table.kind() == Kind::Dependent ? mu - 1.0 : -mu;
  return MembershipPair(mu, lambda);
}

}  // namespace pseudofuzzy
