#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqk/error.hpp"
#include "sqk/group.hpp"
#include "sqk/perm.hpp"
#include "sqk/quandle.hpp"
#include "sqk/symmetric.hpp"

namespace sqk {

/// Upper bound on the number of elements an exhaustive automorphism search may
/// collect before giving up with SizeBoundExceeded.
inline constexpr std::size_t kDefaultMaxGroupOrder = 1'000'000;

namespace detail {
struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
}  // namespace detail

/// A group of permutations of {0..degree-1}, stored as the full element list
/// in lexicographic order. Element indices refer to positions in that list.
///
/// The product reads "apply x, then y", and the group acts on points from the
/// right: a.f = f(a), a.(x.y) = (a.x).y.
class PermGroup {
 public:
  PermGroup() = default;

  /// Closure of `generators` (the identity is always included).
  static PermGroup generated_by(int degree, const std::vector<Perm>& generators) {
    std::vector<Perm> elements{Perm::identity(degree)};
    std::unordered_map<Perm, int, detail::PermHash> seen{{elements[0], 0}};
    for (std::size_t k = 0; k < elements.size(); ++k)
      for (const auto& g : generators) {
        Perm next = elements[k].then(g);
        if (seen.emplace(next, 0).second) elements.push_back(std::move(next));
      }
    PermGroup group(degree, std::move(elements));
    for (const auto& g : generators) {
      const int idx = *group.index_of(g);
      if (std::find(group.generators_.begin(), group.generators_.end(), idx) ==
          group.generators_.end())
        group.generators_.push_back(idx);
    }
    std::sort(group.generators_.begin(), group.generators_.end());
    return group;
  }

  /// Wraps a complete element list known to form a group and picks a generating
  /// set greedily in element order.
  static PermGroup from_elements(int degree, std::vector<Perm> elements) {
    PermGroup group(degree, std::move(elements));
    if (!group.index_of(Perm::identity(degree)))
      throw Error(ErrorKind::NotASubgroup, "permutation set lacks the identity");
    for (const auto& p : group.elements_)
      if (!group.index_of(p.inverse()))
        throw Error(ErrorKind::NotASubgroup, "permutation set not closed under inverse");
    group.generators_ = group.greedy_generators();
    return group;
  }

  int degree() const noexcept { return degree_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  int identity() const noexcept { return identity_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& element(int x) const { return elements_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& generators() const noexcept { return generators_; }

  std::optional<int> index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }

  int mul(int x, int y) const {
    if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(x) * elements_.size() + y];
    return lookup(elements_[x].then(elements_[y]));
  }
  int inv(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
  std::string element_name(int x) const { return elements_[x].cycle_token(); }

  /// a.f = f(a)
  int act(int point, int x) const { return elements_[x][point]; }

 private:
  static constexpr std::size_t kCayleyLimit = 2048;

  PermGroup(int degree, std::vector<Perm> elements) : degree_(degree) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    elements_ = std::move(elements);
    index_.reserve(elements_.size());
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      if (elements_[k].degree() != degree)
        throw Error(ErrorKind::Malformed, "permutation degree mismatch");
      index_.emplace(elements_[k], static_cast<int>(k));
    }
    const auto id = index_.find(Perm::identity(degree));
    identity_ = id == index_.end() ? -1 : id->second;
    inverse_.resize(elements_.size(), -1);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      auto it = index_.find(elements_[k].inverse());
      if (it != index_.end()) inverse_[k] = it->second;
    }
    if (elements_.size() <= kCayleyLimit) {
      std::vector<int> table(elements_.size() * elements_.size());
      for (std::size_t x = 0; x < elements_.size(); ++x)
        for (std::size_t y = 0; y < elements_.size(); ++y)
          table[x * elements_.size() + y] = lookup(elements_[x].then(elements_[y]));
      cayley_ = std::move(table);
    }
  }

  int lookup(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
      throw Error(ErrorKind::NotASubgroup, "permutation set not closed under product");
    return it->second;
  }

  std::vector<int> greedy_generators() const {
    std::vector<int> gens;
    std::vector<char> in(elements_.size(), 0);
    std::vector<int> closure{identity_};
    in[identity_] = 1;
    for (int x = 0; x < order(); ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      // Re-close from scratch: the new generator may combine with old elements.
      closure.assign(1, identity_);
      std::fill(in.begin(), in.end(), 0);
      in[identity_] = 1;
      for (std::size_t k = 0; k < closure.size(); ++k)
        for (int g : gens) {
          const int y = mul(closure[k], g);
          if (!in[y]) {
            in[y] = 1;
            closure.push_back(y);
          }
        }
    }
    return gens;
  }

  int degree_ = 0;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, detail::PermHash> index_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<int> cayley_;
};

namespace detail {

inline PermGroup enumerate_automorphisms(const Quandle& q, const Perm* rho, int max_n,
                                         std::size_t max_order) {
  if (q.order() > max_n)
    throw Error(ErrorKind::SizeBoundExceeded, "order " + std::to_string(q.order()) +
                                                  " exceeds automorphism search bound " +
                                                  std::to_string(max_n));
  std::vector<Perm> found;
  bool overflow = false;
  for_each_isomorphism(q, q, rho, rho, [&](const std::vector<int>& m) {
    if (found.size() >= max_order) {
      overflow = true;
      return false;
    }
    found.emplace_back(m);
    return true;
  });
  if (overflow)
    throw Error(ErrorKind::SizeBoundExceeded,
                "automorphism group has more than " + std::to_string(max_order) + " elements");
  return PermGroup::from_elements(q.order(), std::move(found));
}

}  // namespace detail

/// All quandle automorphisms of q.
inline PermGroup aut_group(const Quandle& q, int max_n = kDefaultMaxN,
                           std::size_t max_order = kDefaultMaxGroupOrder) {
  return detail::enumerate_automorphisms(q, nullptr, max_n, max_order);
}

/// Aut(Q, rho): quandle automorphisms commuting with rho.
inline PermGroup symmetric_aut_group(const SymmetricQuandle& s, int max_n = kDefaultMaxN,
                                     std::size_t max_order = kDefaultMaxGroupOrder) {
  return detail::enumerate_automorphisms(s.quandle(), &s.rho(), max_n, max_order);
}

/// Group generated by the translations s_a.
inline PermGroup inner_group(const Quandle& q) {
  std::vector<Perm> gens;
  for (int a = 0; a < q.order(); ++a) gens.push_back(q.translation_perm(a));
  return PermGroup::generated_by(q.order(), gens);
}

/// Inn(Q, rho). Translations are symmetric automorphisms, so this is the same
/// group as for the underlying quandle.
inline PermGroup inner_group(const SymmetricQuandle& s) { return inner_group(s.quandle()); }

struct OrbitDecomposition {
  std::vector<std::vector<int>> orbits;  ///< ascending by least element, each sorted
  std::vector<int> representatives;      ///< least element of each orbit
  std::vector<int> orbit_of;             ///< point -> orbit index

  int size() const noexcept { return static_cast<int>(orbits.size()); }
};

inline OrbitDecomposition orbits(const PermGroup& g) {
  OrbitDecomposition out;
  out.orbit_of.assign(static_cast<std::size_t>(g.degree()), -1);
  for (int a = 0; a < g.degree(); ++a) {
    if (out.orbit_of[a] >= 0) continue;
    const int id = out.size();
    std::vector<int> orbit;
    for (const auto& f : g.elements()) {
      const int b = f[a];
      if (out.orbit_of[b] < 0) {
        out.orbit_of[b] = id;
        orbit.push_back(b);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.representatives.push_back(a);
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

/// {f in G : f(q) = q} as indices into G's element list.
inline Subgroup stabilizer(const PermGroup& g, int point) {
  if (point < 0 || point >= g.degree())
    throw Error(ErrorKind::IndexOutOfRange, "point out of range", {point});
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x)
    if (g.act(point, x) == point) members.push_back(x);
  return make_subgroup(g, std::move(members));
}

/// Least f in G (by element index, i.e. lexicographically) with from.f = to.
inline std::optional<int> transporter(const PermGroup& g, int from, int to) {
  if (from < 0 || from >= g.degree() || to < 0 || to >= g.degree())
    throw Error(ErrorKind::IndexOutOfRange, "point out of range", {from, to});
  for (int x = 0; x < g.order(); ++x)
    if (g.act(from, x) == to) return x;
  return std::nullopt;
}

inline bool is_homogeneous(const SymmetricQuandle& s, int max_n = kDefaultMaxN,
                           std::size_t max_order = kDefaultMaxGroupOrder) {
  return orbits(symmetric_aut_group(s, max_n, max_order)).size() == 1;
}

}  // namespace sqk
