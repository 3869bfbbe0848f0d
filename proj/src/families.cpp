#include "mvsr/families.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"
#include "mvsr/projective.hpp"

namespace mvsr {

namespace {

bool associative(const Table& t, Elem n) {
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

// Least relabelled table over permutations fixing 0 (and the top when
// fix_top is set).
std::vector<Elem> canonical_table(const Table& t, Elem n, bool fix_top) {
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto first = perm.begin() + 1;
  const auto last = fix_top && n > 1 ? perm.end() - 1 : perm.end();
  std::vector<Elem> best;
  std::vector<Elem> cur(n * n);
  do {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) cur[perm[a] * n + perm[b]] = perm[t(a, b)];
    if (best.empty() || cur < best) best = cur;
  } while (first < last && std::next_permutation(first, last));
  return best;
}

CommutativeMonoid monoid_from(std::size_t n, Table t) {
  CommutativeMonoid m;
  m.size = n;
  m.add = std::move(t);
  m.zero = 0;
  return m;
}

}  // namespace

std::vector<CommutativeMonoid> commutative_monoids(std::size_t max_size) {
  std::vector<CommutativeMonoid> out;
  for (std::size_t size = 1; size <= max_size; ++size) {
    const auto n = static_cast<Elem>(size);
    std::vector<std::pair<Elem, Elem>> free;
    for (Elem a = 1; a < n; ++a)
      for (Elem b = a; b < n; ++b) free.emplace_back(a, b);
    guard_enum(saturating_pow(n, free.size(), limits().max_enum), "monoid tables");
    std::set<std::vector<Elem>> seen;
    std::vector<Elem> digits(free.size(), 0);
    for (;;) {
      Table t(n, n);
      for (Elem a = 0; a < n; ++a) {
        t(0, a) = a;
        t(a, 0) = a;
      }
      for (std::size_t i = 0; i < free.size(); ++i) {
        t(free[i].first, free[i].second) = digits[i];
        t(free[i].second, free[i].first) = digits[i];
      }
      if (associative(t, n)) seen.insert(canonical_table(t, n, false));
      std::size_t i = free.size();
      while (i > 0 && ++digits[i - 1] == n) digits[--i] = 0;
      if (i == 0) break;
    }
    for (const auto& key : seen) out.push_back(monoid_from(size, Table(n, n, key)));
  }
  return out;
}

const std::vector<CommutativeMonoid>& small_monoid_family() {
  static const std::vector<CommutativeMonoid> family = commutative_monoids(3);
  return family;
}

std::vector<CommutativeMonoid> semilattices(std::size_t size) {
  if (size == 0) fail(ErrorKind::InvalidArgument, "semilattice of size 0");
  const auto n = static_cast<Elem>(size);
  if (n <= 2) {
    Table t(n, n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) t(a, b) = std::max(a, b);
    return {monoid_from(size, std::move(t))};
  }
  const Elem top = n - 1;
  std::vector<std::pair<Elem, Elem>> optional_pairs;
  for (Elem a = 1; a < top; ++a)
    for (Elem b = a + 1; b < top; ++b) optional_pairs.emplace_back(a, b);
  guard_enum(saturating_pow(2, optional_pairs.size(), limits().max_enum), "semilattice orders");

  std::set<std::vector<Elem>> seen;
  std::vector<CommutativeMonoid> out;
  const std::uint64_t count = std::uint64_t{1} << optional_pairs.size();
  std::vector<char> leq(n * n);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::fill(leq.begin(), leq.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      leq[a * n + a] = 1;
      leq[0 * n + a] = 1;
      leq[a * n + top] = 1;
    }
    for (std::size_t i = 0; i < optional_pairs.size(); ++i)
      if (bits >> i & 1) leq[optional_pairs[i].first * n + optional_pairs[i].second] = 1;
    bool transitive = true;
    for (Elem a = 0; a < n && transitive; ++a)
      for (Elem b = 0; b < n && transitive; ++b)
        for (Elem c = 0; c < n && transitive; ++c)
          if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) transitive = false;
    if (!transitive) continue;
    Table t(n, n);
    bool lattice = true;
    for (Elem a = 0; a < n && lattice; ++a)
      for (Elem b = 0; b < n && lattice; ++b) {
        // The join is the upper bound below every other upper bound.
        std::optional<Elem> join;
        for (Elem c = 0; c < n && !join; ++c) {
          if (!leq[a * n + c] || !leq[b * n + c]) continue;
          bool least = true;
          for (Elem d = 0; d < n && least; ++d)
            if (leq[a * n + d] && leq[b * n + d] && !leq[c * n + d]) least = false;
          if (least) join = c;
        }
        if (!join) lattice = false;
        else t(a, b) = *join;
      }
    if (!lattice) continue;
    if (seen.insert(canonical_table(t, n, true)).second) out.push_back(monoid_from(size, std::move(t)));
  }
  return out;
}

std::vector<FiniteSemimodule> enumerate_modules(const SemiringPtr& scalars, std::size_t max_size) {
  const FiniteSemiring& s = *scalars;
  if (!is_additively_idempotent(s))
    fail(ErrorKind::NotIdempotent, "module families need additively idempotent scalars");
  const auto q = static_cast<Elem>(s.size());
  std::vector<FiniteSemimodule> out;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<FiniteSemimodule> found;
    for (const CommutativeMonoid& l : semilattices(size)) {
      const auto n = static_cast<Elem>(size);
      const std::vector<ElemMap> ends = monoid_homs(l, l);
      ElemMap zero_map(n, l.zero), id(n);
      std::iota(id.begin(), id.end(), 0);
      const auto zero_it = std::find(ends.begin(), ends.end(), zero_map);
      const auto id_it = std::find(ends.begin(), ends.end(), id);
      const std::size_t zero_idx = zero_it - ends.begin(), id_idx = id_it - ends.begin();

      std::vector<Elem> free;
      for (Elem a = 0; a < q; ++a)
        if (a != s.zero() && a != s.one()) free.push_back(a);
      guard_enum(saturating_pow(ends.size(), free.size(), limits().max_enum), "module actions");

      std::vector<long> choice(q, -1);
      choice[s.zero()] = static_cast<long>(zero_idx);
      choice[s.one()] = static_cast<long>(id_idx);
      if (s.zero() == s.one() && zero_idx != id_idx) continue;

      // Laws among scalars whose maps are already chosen.
      const auto consistent = [&]() {
        for (Elem a = 0; a < q; ++a) {
          if (choice[a] < 0) continue;
          for (Elem b = 0; b < q; ++b) {
            if (choice[b] < 0) continue;
            const ElemMap& fa = ends[choice[a]];
            const ElemMap& fb = ends[choice[b]];
            const Elem sum = s.add(a, b), prod = s.mul(a, b);
            if (choice[sum] >= 0) {
              const ElemMap& fs = ends[choice[sum]];
              for (Elem x = 0; x < n; ++x)
                if (fs[x] != l.sum(fa[x], fb[x])) return false;
            }
            if (choice[prod] >= 0) {
              const ElemMap& fp = ends[choice[prod]];
              for (Elem x = 0; x < n; ++x)
                if (fp[x] != fa[fb[x]]) return false;
            }
          }
        }
        return true;
      };

      const auto emit = [&]() {
        Table action(q, n);
        for (Elem a = 0; a < q; ++a)
          for (Elem x = 0; x < n; ++x) action(a, x) = ends[choice[a]][x];
        FiniteSemimodule m(scalars, size, l.add, l.zero, std::move(action));
        for (const FiniteSemimodule& prev : found)
          if (are_isomorphic(prev, m)) return;
        found.push_back(std::move(m));
      };

      const auto search = [&](const auto& self, std::size_t i) -> void {
        if (!consistent()) return;
        if (i == free.size()) {
          emit();
          return;
        }
        for (std::size_t e = 0; e < ends.size(); ++e) {
          choice[free[i]] = static_cast<long>(e);
          self(self, i + 1);
        }
        choice[free[i]] = -1;
      };
      search(search, 0);
    }
    for (auto& m : found) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace mvsr
