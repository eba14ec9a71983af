#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqk/error.hpp"
#include "sqk/group.hpp"
#include "sqk/perm.hpp"

namespace sqk {

/// A finite rack or quandle given by its operation table.
///
/// Rows index the left argument and columns the right one: op(a, b) = table[a][b]
/// is a*b, so the right translation s_b is column b. The dual table holds the
/// unique x with x*b = a at [a][b].
class Quandle {
 public:
  int order() const noexcept { return static_cast<int>(op_.size()); }
  int op(int a, int b) const { return op_[a][b]; }
  int dual(int a, int b) const { return dual_[a][b]; }
  const Table& table() const noexcept { return op_; }
  const Table& dual_table() const noexcept { return dual_; }
  /// True when (Q1) a*a = a fails and the table was accepted as a rack.
  bool is_rack_only() const noexcept { return rack_only_; }
  /// s_b : a -> a*b
  const Perm& translation_perm(int b) const { return translations_[b]; }

  friend bool operator==(const Quandle& a, const Quandle& b) { return a.op_ == b.op_; }

 private:
  friend Quandle quandle_from_table(Table table, bool allow_rack);

  Table op_;
  Table dual_;
  std::vector<Perm> translations_;
  bool rack_only_ = false;
};

/// Validates (Q1)-(Q3) and derives the dual table. With `allow_rack`, a table
/// satisfying (Q2) and (Q3) but not (Q1) is accepted and flagged rack-only.
inline Quandle quandle_from_table(Table table, bool allow_rack = false) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::Malformed, "operation table is empty");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::Malformed, "row " + std::to_string(a) + " has " +
                                            std::to_string(table[a].size()) + " entries, expected " +
                                            std::to_string(n),
                  {a});
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw Error(ErrorKind::IndexOutOfRange,
                    "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range",
                    {a, b});
  }

  bool idempotent = true;
  int first_non_idempotent = -1;
  for (int a = 0; a < n && idempotent; ++a)
    if (table[a][a] != a) {
      idempotent = false;
      first_non_idempotent = a;
    }
  if (!idempotent && !allow_rack)
    throw Error(ErrorKind::AxiomQ1Violated,
                std::to_string(first_non_idempotent) + "*" + std::to_string(first_non_idempotent) +
                    " != " + std::to_string(first_non_idempotent),
                {first_non_idempotent});

  Table dual(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      int& slot = dual[table[a][b]][b];
      if (slot >= 0)
        throw Error(ErrorKind::AxiomQ2Violated,
                    "column " + std::to_string(b) + " is not a bijection (" + std::to_string(slot) +
                        "*" + std::to_string(b) + " = " + std::to_string(a) + "*" +
                        std::to_string(b) + ")",
                    {b});
      slot = a;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[table[a][c]][table[b][c]])
          throw Error(ErrorKind::AxiomQ3Violated,
                      "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
                          " != (" + std::to_string(a) + "*" + std::to_string(c) + ")*(" +
                          std::to_string(b) + "*" + std::to_string(c) + ")",
                      {a, b, c});

  Quandle q;
  q.translations_.reserve(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) {
    std::vector<int> column(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) column[a] = table[a][b];
    q.translations_.emplace_back(std::move(column));
  }
  q.op_ = std::move(table);
  q.dual_ = std::move(dual);
  q.rack_only_ = !idempotent;
  return q;
}

inline int dual_op(const Quandle& q, int a, int b) {
  if (a < 0 || a >= q.order() || b < 0 || b >= q.order())
    throw Error(ErrorKind::IndexOutOfRange, "dual_op argument out of range", {a, b});
  return q.dual(a, b);
}

struct Translation {
  int base = 0;
  Perm map;
};

inline Translation translation(const Quandle& q, int b) {
  if (b < 0 || b >= q.order())
    throw Error(ErrorKind::IndexOutOfRange, "translation base out of range", {b});
  return Translation{b, q.translation_perm(b)};
}

inline bool is_kei(const Quandle& q) {
  for (int b = 0; b < q.order(); ++b)
    if (!q.translation_perm(b).is_involution()) return false;
  return true;
}

/// A bijection between element sets; `map[a]` is the image of source element a.
struct Isomorphism {
  Perm map;
};

/// True iff m(a*b) = m(a)*m(b) for all pairs.
inline bool is_homomorphism(const Quandle& source, const Quandle& target, const Perm& m) {
  if (source.order() != target.order() || m.degree() != source.order()) return false;
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (m[source.op(a, b)] != target.op(m[a], m[b])) return false;
  return true;
}

/// Components of the "a ~ a*b" relation, i.e. orbits of the group generated by
/// all translations. Returns the orbit index per element (orbits numbered by
/// least element).
inline std::vector<int> translation_orbit_ids(const Quandle& q) {
  const int n = q.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) parent[a] = a;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int x = find(a), y = find(q.op(a, b));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  std::vector<int> ids(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<int> root_id(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    const int r = find(a);
    if (root_id[r] < 0) root_id[r] = next++;
    ids[a] = root_id[r];
  }
  return ids;
}

namespace detail {

/// Per-element isomorphism invariant used to prune candidate images.
struct ElementSignature {
  std::vector<int> cycle_type;  ///< of s_a
  int row_fixed = 0;            ///< #{b : a*b = a}
  int orbit_size = 0;           ///< size of a's translation orbit
  int rho_fixed = -1;           ///< 1 if rho(a) = a, 0 if not, -1 without rho

  friend bool operator==(const ElementSignature&, const ElementSignature&) = default;
  friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

inline std::vector<ElementSignature> signatures(const Quandle& q, const Perm* rho) {
  const int n = q.order();
  const auto ids = translation_orbit_ids(q);
  std::vector<int> orbit_size(static_cast<std::size_t>(n), 0);
  for (int id : ids) ++orbit_size[id];
  std::vector<ElementSignature> out(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    auto& s = out[a];
    s.cycle_type = q.translation_perm(a).cycle_type();
    for (int b = 0; b < n; ++b) s.row_fixed += q.op(a, b) == a;
    s.orbit_size = orbit_size[ids[a]];
    if (rho) s.rho_fixed = (*rho)[a] == a;
  }
  return out;
}

/// Depth-first search over maps source -> target, assigning images to source
/// elements 0, 1, ... in order with candidates in increasing order, so maps are
/// produced in lexicographic order. `visit(map)` returns false to stop.
/// When both rho pointers are set, maps must also satisfy m(rho(a)) = rho'(m(a)).
template <class Visitor>
void for_each_isomorphism(const Quandle& source, const Quandle& target, const Perm* source_rho,
                          const Perm* target_rho, Visitor&& visit) {
  const int n = source.order();
  if (target.order() != n) return;
  const bool with_rho = source_rho != nullptr && target_rho != nullptr;

  const auto src_sig = signatures(source, with_rho ? source_rho : nullptr);
  const auto dst_sig = signatures(target, with_rho ? target_rho : nullptr);
  {
    auto a = src_sig, b = dst_sig;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (src_sig[a] == dst_sig[c]) candidates[a].push_back(c);

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<int> preimage(static_cast<std::size_t>(n), -1);

  // Every constraint whose source side involves only elements <= k is checked;
  // a constraint naming an unassigned source element only requires its forced
  // image to be still free.
  auto consistent = [&](int k) {
    auto agrees = [&](int src_elem, int img) {
      if (map[src_elem] >= 0) return map[src_elem] == img;
      return preimage[img] < 0;
    };
    for (int a = 0; a <= k; ++a) {
      if (!agrees(source.op(a, k), target.op(map[a], map[k]))) return false;
      if (!agrees(source.op(k, a), target.op(map[k], map[a]))) return false;
    }
    // Older constraints: the one landing on k must now agree, the ones still
    // pending must not have had their forced image taken by k.
    auto settles = [&](int src_elem, int img) {
      if (src_elem == k) return img == map[k];
      if (src_elem > k) return img != map[k];
      return true;
    };
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (!settles(source.op(a, b), target.op(map[a], map[b]))) return false;
    if (with_rho) {
      for (int a = 0; a <= k; ++a)
        if (!agrees((*source_rho)[a], (*target_rho)[map[a]])) return false;
      for (int a = 0; a < k; ++a)
        if (!settles((*source_rho)[a], (*target_rho)[map[a]])) return false;
    }
    return true;
  };

  bool stop = false;
  auto recurse = [&](auto&& self, int k) -> void {
    if (k == n) {
      if (!visit(map)) stop = true;
      return;
    }
    for (int c : candidates[k]) {
      if (preimage[c] >= 0) continue;
      map[k] = c;
      preimage[c] = k;
      if (consistent(k)) self(self, k + 1);
      map[k] = -1;
      preimage[c] = -1;
      if (stop) return;
    }
  };
  recurse(recurse, 0);
}

}  // namespace detail

/// Lexicographically least quandle isomorphism source -> target, if any.
inline std::optional<Isomorphism> find_quandle_isomorphism(const Quandle& source,
                                                           const Quandle& target) {
  std::optional<Isomorphism> found;
  detail::for_each_isomorphism(source, target, nullptr, nullptr, [&](const std::vector<int>& m) {
    found = Isomorphism{Perm(m)};
    return false;
  });
  if (found && !is_homomorphism(source, target, found->map))
    throw Error(ErrorKind::InternalVerificationFailed, "isomorphism search returned a non-homomorphism");
  return found;
}

}  // namespace sqk
