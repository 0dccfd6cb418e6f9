#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loccol/budget.hpp"
#include "loccol/rational.hpp"

namespace loccol {

using IntSet = std::vector<int>;  // sorted, no duplicates

/// Pairs (A_i, B_i), i = 1..m, with A_i and B_i disjoint. Indices in the
/// API are 1-based to match the usual statement of the conditions.
struct CrossFamily {
  std::vector<IntSet> a;
  std::vector<IntSet> b;

  CrossFamily() = default;
  /// Normalizes every set and throws ConditionViolated if some A_i meets B_i.
  CrossFamily(std::vector<IntSet> as, std::vector<IntSet> bs);

  int size() const { return static_cast<int>(a.size()); }
  const IntSet& A(int i) const { return a[i - 1]; }
  const IntSet& B(int i) const { return b[i - 1]; }

  friend bool operator==(const CrossFamily&, const CrossFamily&) = default;
};

enum class ConditionKind {
  Bollobas,  // A_i meets B_j for all i != j
  Frankl,    // A_i meets B_j for all i < j
  Beq,       // i < j: A_i meets B_j and |A_j u B_i| <= k-1
  SymBeq,    // i != j: A_i meets B_j and |A_i u B_j| <= k-1
};

struct Condition {
  ConditionKind kind;
  int k = 0;  // Beq / SymBeq only

  static Condition bollobas() { return {ConditionKind::Bollobas, 0}; }
  static Condition frankl() { return {ConditionKind::Frankl, 0}; }
  static Condition beq(int k) { return {ConditionKind::Beq, k}; }
  static Condition sym_beq(int k) { return {ConditionKind::SymBeq, k}; }
};

struct ConditionCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> violation;  // (i, j), 1-based
  std::string reason;

  explicit operator bool() const { return ok; }
};

ConditionCheck check_condition(const CrossFamily& fam, Condition cond);

bool sets_intersect(const IntSet& x, const IntSet& y);
std::size_t union_size(const IntSet& x, const IntSet& y);

/// (r, s) if every |A_i| = r and every |B_i| = s.
std::optional<std::pair<int, int>> uniform_sizes(const CrossFamily& fam);

/// sum_i 1 / C(|A_i|+|B_i|, |A_i|), exactly. Throws ConditionViolated if
/// the Bollobas condition fails.
Rational bollobas_sum(const CrossFamily& fam);

boost::multiprecision::cpp_int binomial(int n, int k);

/// A_i = the i-th r-subset of [r+s] (lexicographic), B_i = its complement.
CrossFamily complement_family(int r, int s);

enum class ShiftVariant { Ordered, Symmetric };

/// Largest m admitting a Beq(k) (ordered: 2^k + 2^(k-1)) or SymBeq(k)
/// (symmetric: 2^k - 2) family.
long long theorem_bound(int k, ShiftVariant variant);

struct ShiftOrderSearch {
  int best_m = 0;
  CrossFamily certificate;
  /// True when the search space for ground sets up to `ground_used` was
  /// exhausted, so best_m + 1 is infeasible over that ground set.
  bool exhaustive = false;
  int ground_used = 0;
  std::uint64_t nodes = 0;
};

/// Largest m with a Beq(k)-valid family over a ground set of at most
/// `ground_limit` elements. The ground set grows from k-1 up to the limit;
/// exhaustiveness is relative to the largest ground size searched.
ShiftOrderSearch max_shift_order(int k, int ground_limit, const Budget& budget = {});

}  // namespace loccol
