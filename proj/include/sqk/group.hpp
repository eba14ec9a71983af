#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqk/error.hpp"

namespace sqk {

/// Anything with dense element indices 0..order()-1 and a product that reads
/// "x then y". Both `FiniteGroup` (table-backed) and `PermGroup` (lists of
/// permutations) model this.
template <class G>
concept GroupLike = requires(const G& g, int x, int y) {
  { g.order() } -> std::convertible_to<int>;
  { g.identity() } -> std::convertible_to<int>;
  { g.mul(x, y) } -> std::convertible_to<int>;
  { g.inv(x) } -> std::convertible_to<int>;
  { g.element_name(x) } -> std::convertible_to<std::string>;
};

using Table = std::vector<std::vector<int>>;

/// A finite group given by its multiplication table; product[x][y] is x then y.
class FiniteGroup {
 public:
  int order() const noexcept { return static_cast<int>(product_.size()); }
  int identity() const noexcept { return identity_; }
  int mul(int x, int y) const { return product_[x][y]; }
  int inv(int x) const { return inverse_[x]; }
  const Table& table() const noexcept { return product_; }
  const std::vector<int>& inverses() const noexcept { return inverse_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool has_names() const noexcept { return !names_.empty(); }

  std::string element_name(int x) const {
    return names_.empty() ? std::to_string(x) : names_[static_cast<std::size_t>(x)];
  }

  std::optional<int> find_name(const std::string& name) const {
    for (std::size_t x = 0; x < names_.size(); ++x)
      if (names_[x] == name) return static_cast<int>(x);
    return std::nullopt;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.product_ == b.product_ && a.names_ == b.names_;
  }

 private:
  friend FiniteGroup group_from_table(Table table, std::vector<std::string> names);

  Table product_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

/// Validates `table` as a group table and computes the identity and inverses.
/// Checks run in the order: shape, Latin square, identity, associativity; the
/// first violation is reported with its cell or triple as the witness.
inline FiniteGroup group_from_table(Table table, std::vector<std::string> names = {}) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::Malformed, "group table is empty");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      throw Error(ErrorKind::Malformed, "group table row " + std::to_string(x) + " has " +
                                            std::to_string(table[x].size()) + " entries",
                  {x});
    for (int y = 0; y < n; ++y)
      if (table[x][y] < 0 || table[x][y] >= n)
        throw Error(ErrorKind::IndexOutOfRange,
                    "entry (" + std::to_string(x) + "," + std::to_string(y) + ") out of range",
                    {x, y});
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw Error(ErrorKind::Malformed, "expected " + std::to_string(n) + " names");

  for (int x = 0; x < n; ++x) {
    std::vector<int> row_seen(n, -1);
    std::vector<int> col_seen(n, -1);
    for (int y = 0; y < n; ++y) {
      if (row_seen[table[x][y]] >= 0)
        throw Error(ErrorKind::NotLatinSquare,
                    "row " + std::to_string(x) + " repeats entry " + std::to_string(table[x][y]) +
                        " at column " + std::to_string(y),
                    {x, y});
      row_seen[table[x][y]] = y;
      if (col_seen[table[y][x]] >= 0)
        throw Error(ErrorKind::NotLatinSquare,
                    "column " + std::to_string(x) + " repeats entry " +
                        std::to_string(table[y][x]) + " at row " + std::to_string(y),
                    {y, x});
      col_seen[table[y][x]] = y;
    }
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw Error(ErrorKind::NotAssociative,
                      "(" + std::to_string(x) + "." + std::to_string(y) + ")." +
                          std::to_string(z) + " differs from " + std::to_string(x) + ".(" +
                          std::to_string(y) + "." + std::to_string(z) + ")",
                      {x, y, z});

  FiniteGroup g;
  g.inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (table[x][y] == identity) g.inverse_[x] = y;
  g.product_ = std::move(table);
  g.identity_ = identity;
  g.names_ = std::move(names);
  return g;
}

template <GroupLike G>
void check_index(const G& g, int x) {
  if (x < 0 || x >= g.order())
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(x) + " outside 0.." + std::to_string(g.order() - 1),
                {x});
}

/// A subgroup as a sorted set of element indices of its parent group. The
/// parent is not stored; operations take it explicitly.
class Subgroup {
 public:
  Subgroup() = default;

  int order() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const noexcept { return elements_; }
  bool contains(int x) const {
    return x >= 0 && static_cast<std::size_t>(x) < member_.size() && member_[x];
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }

  template <GroupLike G>
  friend Subgroup make_subgroup(const G& g, std::vector<int> elements);

 private:
  std::vector<int> elements_;
  std::vector<char> member_;
};

/// Wraps an explicit element set, checking that it is a subgroup of `g`.
template <GroupLike G>
Subgroup make_subgroup(const G& g, std::vector<int> elements) {
  for (int x : elements) check_index(g, x);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h;
  h.member_.assign(static_cast<std::size_t>(g.order()), 0);
  for (int x : elements) h.member_[x] = 1;
  h.elements_ = std::move(elements);
  if (!h.contains(g.identity()))
    throw Error(ErrorKind::NotASubgroup, "identity missing from subgroup", {g.identity()});
  for (int x : h.elements_) {
    if (!h.contains(g.inv(x)))
      throw Error(ErrorKind::NotASubgroup, "not closed under inverse at " + std::to_string(x),
                  {x});
    for (int y : h.elements_)
      if (!h.contains(g.mul(x, y)))
        throw Error(ErrorKind::NotASubgroup,
                    "not closed under product at (" + std::to_string(x) + "," +
                        std::to_string(y) + ")",
                    {x, y});
  }
  return h;
}

/// Smallest subgroup containing `gens`.
template <GroupLike G>
Subgroup subgroup_closure(const G& g, std::span<const int> gens) {
  for (int x : gens) check_index(g, x);
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> elements{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (int s : gens) {
      const int y = g.mul(elements[k], s);
      if (!in[y]) {
        in[y] = 1;
        elements.push_back(y);
      }
    }
  }
  return make_subgroup(g, std::move(elements));
}

template <GroupLike G>
Subgroup subgroup_closure(const G& g, std::initializer_list<int> gens) {
  return subgroup_closure(g, std::span<const int>(gens.begin(), gens.size()));
}

template <GroupLike G>
Subgroup whole_group(const G& g) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) all[x] = x;
  return make_subgroup(g, std::move(all));
}

/// Right cosets Hx. Each coset is named by its least element index, and cosets
/// are listed in increasing order of that representative.
struct CosetSpace {
  std::vector<std::vector<int>> cosets;
  std::vector<int> representatives;
  std::vector<int> coset_of;  ///< element index -> coset position

  int size() const noexcept { return static_cast<int>(cosets.size()); }
  int index_of_representative(int rep) const {
    for (std::size_t c = 0; c < representatives.size(); ++c)
      if (representatives[c] == rep) return static_cast<int>(c);
    return -1;
  }
};

template <GroupLike G>
bool is_subgroup_of(const G& g, const Subgroup& h) {
  if (h.order() == 0 || h.elements().back() >= g.order()) return false;
  try {
    make_subgroup(g, h.elements());
  } catch (const Error&) {
    return false;
  }
  return true;
}

template <GroupLike G>
CosetSpace right_cosets(const G& g, const Subgroup& h) {
  if (!is_subgroup_of(g, h))
    throw Error(ErrorKind::NotASubgroup, "element set is not a subgroup of the group");
  if (g.order() % h.order() != 0)
    throw Error(ErrorKind::InternalVerificationFailed, "subgroup order does not divide group order");
  CosetSpace space;
  space.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (space.coset_of[x] >= 0) continue;
    const int c = space.size();
    std::vector<int> coset;
    coset.reserve(static_cast<std::size_t>(h.order()));
    for (int hh : h.elements()) {
      const int y = g.mul(hh, x);
      space.coset_of[y] = c;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    space.representatives.push_back(x);
    space.cosets.push_back(std::move(coset));
  }
  return space;
}

/// True iff z^-1 h z = h for every h in H.
template <GroupLike G>
bool centralizes(const G& g, int z, const Subgroup& h) {
  check_index(g, z);
  for (int x : h.elements()) check_index(g, x);
  for (int x : h.elements())
    if (g.mul(g.mul(g.inv(z), x), z) != x) return false;
  return true;
}

/// x^-1 g x
template <GroupLike G>
int conjugate(const G& g, int element, int by) {
  return g.mul(g.mul(g.inv(by), element), by);
}

template <GroupLike G>
Subgroup centralizer(const G& g, int element) {
  check_index(g, element);
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (g.mul(x, element) == g.mul(element, x)) out.push_back(x);
  return make_subgroup(g, std::move(out));
}

/// Conjugacy classes in increasing order of least element; each class sorted.
template <GroupLike G>
std::vector<std::vector<int>> conjugacy_classes(const G& g) {
  std::vector<std::vector<int>> classes;
  std::vector<char> done(static_cast<std::size_t>(g.order()), 0);
  for (int a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::vector<int> cls;
    for (int x = 0; x < g.order(); ++x) {
      const int c = conjugate(g, a, x);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace sqk
