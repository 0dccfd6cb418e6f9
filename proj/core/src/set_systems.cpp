#include "loccol/set_systems.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "loccol/error.hpp"

namespace loccol {

namespace {

IntSet normalized(IntSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string pair_text(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

CrossFamily::CrossFamily(std::vector<IntSet> as, std::vector<IntSet> bs) {
  if (as.size() != bs.size()) {
    throw Error(ErrorCode::BadParameter, "A and B must have the same length");
  }
  for (auto& s : as) a.push_back(normalized(std::move(s)));
  for (auto& s : bs) b.push_back(normalized(std::move(s)));
  for (int i = 1; i <= size(); ++i) {
    if (sets_intersect(A(i), B(i))) {
      throw Error(ErrorCode::ConditionViolated, "A_i meets B_i at i=" + std::to_string(i));
    }
  }
}

bool sets_intersect(const IntSet& x, const IntSet& y) {
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return true;
    if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::size_t union_size(const IntSet& x, const IntSet& y) {
  std::size_t common = 0, i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) {
      ++common;
      ++i;
      ++j;
    } else if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return x.size() + y.size() - common;
}

ConditionCheck check_condition(const CrossFamily& fam, Condition cond) {
  const int m = fam.size();
  const bool needs_k = cond.kind == ConditionKind::Beq || cond.kind == ConditionKind::SymBeq;
  if (needs_k && cond.k < 1) throw Error(ErrorCode::BadParameter, "k must be >= 1");
  for (int i = 1; i <= m; ++i) {
    if (sets_intersect(fam.A(i), fam.B(i))) {
      return {false, std::pair{i, i}, "A_i meets B_i"};
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      const bool ordered_only =
          cond.kind == ConditionKind::Frankl || cond.kind == ConditionKind::Beq;
      if (ordered_only && i > j) continue;
      if (!sets_intersect(fam.A(i), fam.B(j))) {
        return {false, std::pair{i, j}, "A_i and B_j are disjoint at " + pair_text(i, j)};
      }
      const auto limit = static_cast<std::size_t>(cond.k - 1);
      if (cond.kind == ConditionKind::Beq && union_size(fam.A(j), fam.B(i)) > limit) {
        return {false, std::pair{i, j}, "|A_j u B_i| > k-1 at " + pair_text(i, j)};
      }
      if (cond.kind == ConditionKind::SymBeq && union_size(fam.A(i), fam.B(j)) > limit) {
        return {false, std::pair{i, j}, "|A_i u B_j| > k-1 at " + pair_text(i, j)};
      }
    }
  }
  return {};
}

std::optional<std::pair<int, int>> uniform_sizes(const CrossFamily& fam) {
  if (fam.size() == 0) return std::nullopt;
  const auto r = fam.a.front().size();
  const auto s = fam.b.front().size();
  for (int i = 1; i <= fam.size(); ++i) {
    if (fam.A(i).size() != r || fam.B(i).size() != s) return std::nullopt;
  }
  return std::pair{static_cast<int>(r), static_cast<int>(s)};
}

boost::multiprecision::cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  boost::multiprecision::cpp_int out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Rational bollobas_sum(const CrossFamily& fam) {
  if (auto check = check_condition(fam, Condition::bollobas()); !check) {
    throw Error(ErrorCode::ConditionViolated, check.reason);
  }
  Rational sum = 0;
  for (int i = 1; i <= fam.size(); ++i) {
    const int r = static_cast<int>(fam.A(i).size());
    const int s = static_cast<int>(fam.B(i).size());
    sum += Rational(1, binomial(r + s, r));
  }
  return sum;
}

CrossFamily complement_family(int r, int s) {
  if (r < 0 || s < 0 || r + s < 1 || r + s > 30) {
    throw Error(ErrorCode::BadParameter, "complement family needs 1 <= r+s <= 30");
  }
  const int n = r + s;
  std::vector<IntSet> as, bs;
  // Gosper-free enumeration: masks with r bits in increasing lexicographic
  // order of the element lists.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == r) masks.push_back(mask);
  }
  auto elements = [n](std::uint32_t mask) {
    IntSet out;
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1u) out.push_back(e + 1);
    }
    return out;
  };
  std::sort(masks.begin(), masks.end(),
            [&](std::uint32_t x, std::uint32_t y) { return elements(x) < elements(y); });
  for (auto mask : masks) {
    as.push_back(elements(mask));
    bs.push_back(elements(~mask & ((1u << n) - 1)));
  }
  return CrossFamily(std::move(as), std::move(bs));
}

long long theorem_bound(int k, ShiftVariant variant) {
  if (k < 1 || k > 60) throw Error(ErrorCode::BadParameter, "k out of range");
  const long long p = 1LL << k;
  return variant == ShiftVariant::Ordered ? p + p / 2 : p - 2;
}

namespace {

using Mask = std::uint32_t;

// Depth-first search for Beq(k) families over the ground set {0..g-1}.
//
// A family of size m is an "open" prefix of size m-1 (every B_i of size at
// most k-1, which the last pair requires) followed by a closing pair whose
// B may be as large as possible, i.e. the complement of its A. The first
// pair is fixed up to symmetry: B_1 = {0..b-1} with b <= k-1 and A_1 its
// complement (enlarging A_1 never breaks a condition). Later pairs are
// generated up to the symmetry of elements that no set tells apart.
class ShiftOrderDfs {
 public:
  ShiftOrderDfs(int k, int ground, BudgetMeter& meter)
      : k_(k), ground_(ground), full_((ground >= 32) ? ~0u : ((1u << ground) - 1)), meter_(meter) {}

  void run() {
    for (int b = 0; b <= std::min(k_ - 1, ground_); ++b) {
      const Mask b1 = (b == 0) ? 0u : ((1u << b) - 1);
      const Mask a1 = full_ & ~b1;
      // m = 1 needs nothing beyond disjointness
      record_closing({}, {}, a1, full_ & ~a1);
      as_.push_back(a1);
      bs_.push_back(b1);
      extend();
      as_.pop_back();
      bs_.pop_back();
      if (meter_.exhausted()) return;
    }
  }

  int best_m() const { return best_m_; }
  const std::vector<Mask>& best_a() const { return best_a_; }
  const std::vector<Mask>& best_b() const { return best_b_; }

 private:
  bool new_a_ok(Mask a) const {
    if (std::popcount(a) > k_ - 1) return false;
    for (Mask b : bs_) {
      if (std::popcount(a | b) > k_ - 1) return false;
    }
    return true;
  }

  // B_j must meet every earlier A_i.
  bool new_b_ok(Mask b) const {
    for (Mask a : as_) {
      if ((a & b) == 0) return false;
    }
    return true;
  }

  void record_closing(const std::vector<Mask>& as, const std::vector<Mask>& bs, Mask a, Mask b) {
    const int m = static_cast<int>(as.size()) + 1;
    if (m <= best_m_) return;
    best_m_ = m;
    best_a_ = as;
    best_b_ = bs;
    best_a_.push_back(a);
    best_b_.push_back(b);
  }

  // Elements grouped by their membership pattern across all sets so far.
  std::vector<std::vector<int>> classes() const {
    std::map<std::vector<int>, std::vector<int>> by_signature;
    for (int e = 0; e < ground_; ++e) {
      std::vector<int> sig;
      sig.reserve(2 * as_.size());
      for (std::size_t i = 0; i < as_.size(); ++i) {
        sig.push_back(static_cast<int>(as_[i] >> e & 1u));
        sig.push_back(static_cast<int>(bs_[i] >> e & 1u));
      }
      by_signature[sig].push_back(e);
    }
    std::vector<std::vector<int>> out;
    for (auto& [sig, members] : by_signature) out.push_back(std::move(members));
    return out;
  }

  // Enumerates canonical (A, B) choices: within each class, A takes the
  // lowest elements and B the next ones.
  template <typename Visit>
  void choose(const std::vector<std::vector<int>>& cls, std::size_t index, Mask a, Mask b,
              int max_b, Visit&& visit) {
    if (std::popcount(a) > k_ - 1 || std::popcount(b) > max_b) return;
    if (index == cls.size()) {
      visit(a, b);
      return;
    }
    const auto& members = cls[index];
    const int size = static_cast<int>(members.size());
    for (int na = 0; na <= size; ++na) {
      for (int nb = 0; na + nb <= size; ++nb) {
        Mask a2 = a, b2 = b;
        for (int x = 0; x < na; ++x) a2 |= 1u << members[x];
        for (int x = na; x < na + nb; ++x) b2 |= 1u << members[x];
        choose(cls, index + 1, a2, b2, max_b, visit);
        if (meter_.exhausted()) return;
      }
    }
  }

  void extend() {
    if (!meter_.tick()) return;
    const auto cls = classes();
    // closing pairs: any admissible A with the complementary B
    choose(cls, 0, 0u, 0u, 0, [&](Mask a, Mask) {
      if (!new_a_ok(a)) return;
      const Mask b = full_ & ~a;
      if (new_b_ok(b)) record_closing(as_, bs_, a, b);
    });
    // open pairs
    choose(cls, 0, 0u, 0u, k_ - 1, [&](Mask a, Mask b) {
      if (!new_a_ok(a) || !new_b_ok(b)) return;
      as_.push_back(a);
      bs_.push_back(b);
      extend();
      as_.pop_back();
      bs_.pop_back();
    });
  }

  int k_;
  int ground_;
  Mask full_;
  BudgetMeter& meter_;
  std::vector<Mask> as_;
  std::vector<Mask> bs_;
  int best_m_ = 0;
  std::vector<Mask> best_a_;
  std::vector<Mask> best_b_;
};

IntSet mask_elements(Mask mask) {
  IntSet out;
  for (int e = 0; e < 32; ++e) {
    if (mask >> e & 1u) out.push_back(e + 1);
  }
  return out;
}

}  // namespace

ShiftOrderSearch max_shift_order(int k, int ground_limit, const Budget& budget) {
  if (k < 2) throw Error(ErrorCode::BadParameter, "k must be >= 2");
  if (ground_limit < 1 || ground_limit > 31) {
    throw Error(ErrorCode::BadParameter, "ground_limit must be in 1..31");
  }
  BudgetMeter meter(budget);
  ShiftOrderSearch result;
  for (int g = std::min(ground_limit, std::max(1, k - 1)); g <= ground_limit; ++g) {
    ShiftOrderDfs dfs(k, g, meter);
    dfs.run();
    if (dfs.best_m() > result.best_m) {
      result.best_m = dfs.best_m();
      std::vector<IntSet> as, bs;
      for (Mask a : dfs.best_a()) as.push_back(mask_elements(a));
      for (Mask b : dfs.best_b()) bs.push_back(mask_elements(b));
      result.certificate = CrossFamily(std::move(as), std::move(bs));
    }
    result.ground_used = g;
    result.exhaustive = !meter.exhausted();
    if (meter.exhausted()) break;
  }
  result.nodes = meter.nodes();
  return result;
}

}  // namespace loccol
