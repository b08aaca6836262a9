#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "pseudofuzzy/ptfn.hpp"

namespace pseudofuzzy {

inline constexpr int kDefaultLevels = 11;
inline constexpr int kDefaultOracleGrid = 256;

struct CutRow {
  double alpha;
  Interval interval;
};

/// Level-cut representation of a fuzzy result. Rows run from alpha = 0 to
/// alpha = 1 with strictly increasing levels and nested intervals.
class CutTable {
 public:
  CutTable(std::vector<CutRow> rows, Kind kind);

  std::span<const CutRow> rows() const noexcept { return rows_; }
  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const CutRow& operator[](std::size_t i) const { return rows_[i]; }

 private:
  std::vector<CutRow> rows_;
  Kind kind_;
};

enum class BinaryOpCode { Add, Sub, Mul, Div };

std::string_view to_string(BinaryOpCode op);

/// `levels` equally spaced levels 0, 1/(levels-1), ..., 1.
std::vector<double> level_grid(int levels);

PseudoTfn add(const PseudoTfn& p, const PseudoTfn& q);
PseudoTfn sub(const PseudoTfn& p, const PseudoTfn& q);
PseudoTfn scale(const PseudoTfn& p, double k);

/// Exact alpha-cuts of a single number at `levels` levels.
CutTable cut_table(const PseudoTfn& p, int levels = kDefaultLevels);

CutTable mul(const PseudoTfn& p, const PseudoTfn& q, int levels = kDefaultLevels);
CutTable div(const PseudoTfn& p, const PseudoTfn& q, int levels = kDefaultLevels);

/// Brute-force sup-min extension principle. Each support [a, c] is sampled
/// at grid_per_operand + 1 uniform nodes plus the peak; every node pair
/// contributes op(x, y) at membership min(mu_p(x), mu_q(y)).
CutTable extension_oracle(const PseudoTfn& p, const PseudoTfn& q, BinaryOpCode op,
                          int grid_per_operand = kDefaultOracleGrid, int levels = kDefaultLevels);

/// Single-operand counterpart of extension_oracle for x -> k * x.
CutTable extension_oracle_scale(const PseudoTfn& p, double k, int grid_per_operand = kDefaultOracleGrid,
                                int levels = kDefaultLevels);

/// Largest endpoint difference between two tables over the same levels.
double max_endpoint_deviation(const CutTable& lhs, const CutTable& rhs);

/// Membership pair of x under a tabulated result. mu is interpolated
/// linearly between the highest level containing x and the next one up;
/// lambda follows the identity of the table's kind.
MembershipPair lambda_of_result(const CutTable& table, double x);

}  // namespace pseudofuzzy
