#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sqk/coset.hpp"
#include "sqk/error.hpp"
#include "sqk/group.hpp"
#include "sqk/perm.hpp"
#include "sqk/quandle.hpp"
#include "sqk/symmetric.hpp"

namespace sqk {

enum class Produces { Quandle, SymmetricQuandle, Group, Presentation };

struct CatalogEntry {
  std::string name;
  std::vector<std::string> parameters;
  Produces produces;
};

/// Names accepted by the `catalog` verb.
inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"dihedral-quandle", {"n"}, Produces::Quandle},
      {"trivial-quandle", {"n"}, Produces::Quandle},
      {"antipodal", {"n"}, Produces::SymmetricQuandle},
      {"conj", {"group"}, Produces::SymmetricQuandle},
      {"quaternion", {}, Produces::Group},
      {"cyclic", {"n"}, Produces::Group},
      {"dihedral-group", {"n"}, Produces::Group},
      {"sym", {"n"}, Produces::Group},
      {"paper-example", {}, Produces::Presentation},
  };
  return entries;
}

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParameterOutOfRange, what);
}
}  // namespace detail

/// R_n: x*y = 2y - x mod n.
inline Quandle dihedral_quandle(int n) {
  detail::require(n >= 1, "dihedral quandle needs n >= 1");
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
  return quandle_from_table(std::move(t));
}

/// a*b = a on n points.
inline Quandle trivial_quandle(int n) {
  detail::require(n >= 1, "trivial quandle needs n >= 1");
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) std::fill(t[a].begin(), t[a].end(), a);
  return quandle_from_table(std::move(t));
}

/// (R_n, x -> x + n/2). The involution is run through the full good-involution
/// check rather than assumed.
inline SymmetricQuandle antipodal(int n) {
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorKind::OddOrder, "antipodal map needs a positive even order, got " +
                                         std::to_string(n));
  std::vector<int> rho(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) rho[x] = (x + n / 2) % n;
  try {
    return attach_involution(dihedral_quandle(n), rho);
  } catch (const Error& e) {
    throw Error(ErrorKind::GoodInvolutionCheckFailed,
                "antipodal map on R_" + std::to_string(n) + ": " + e.what(), e.witness());
  }
}

/// Conj(G): a*b = b^-1 a b.
inline Quandle conj_quandle(const FiniteGroup& g) {
  const int n = g.order();
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = conjugate(g, a, b);
  return quandle_from_table(std::move(t));
}

/// (Conj(G), Inv(G)).
inline SymmetricQuandle conj_symmetric_quandle(const FiniteGroup& g) {
  return attach_involution(conj_quandle(g), g.inverses());
}

inline FiniteGroup cyclic_group(int n) {
  detail::require(n >= 1, "cyclic group needs n >= 1");
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    names.push_back(std::to_string(x));
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  }
  return group_from_table(std::move(t), std::move(names));
}

/// Symmetries of the regular n-gon, order 2n. Element r^a s^i has index a + n*i,
/// and s r = r^-1 s.
inline FiniteGroup dihedral_group(int n) {
  detail::require(n >= 1, "dihedral group needs n >= 1");
  const int order = 2 * n;
  Table t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  std::vector<std::string> names;
  for (int x = 0; x < order; ++x) {
    const int a = x % n, i = x / n;
    std::string name = a == 0 ? "" : (a == 1 ? "r" : "r" + std::to_string(a));
    if (i) name += "s";
    names.push_back(name.empty() ? "e" : name);
    for (int y = 0; y < order; ++y) {
      const int b = y % n, j = y / n;
      const int rot = ((i ? a - b : a + b) % n + n) % n;
      t[x][y] = rot + n * ((i + j) % 2);
    }
  }
  return group_from_table(std::move(t), std::move(names));
}

/// S_n for n <= 4: permutations of {0..n-1} in lexicographic order of their
/// image arrays, product "apply x, then y".
inline FiniteGroup symmetric_group(int n) {
  detail::require(n >= 1 && n <= 4, "symmetric group catalog covers 1 <= n <= 4");
  std::vector<Perm> perms;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do perms.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  const int order = static_cast<int>(perms.size());
  Table t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  std::vector<std::string> names;
  for (int x = 0; x < order; ++x) {
    names.push_back(perms[x].is_identity() ? "e" : perms[x].cycle_token());
    for (int y = 0; y < order; ++y) {
      const Perm p = perms[x].then(perms[y]);
      t[x][y] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
    }
  }
  return group_from_table(std::move(t), std::move(names));
}

/// Q_8 = <a, b, c | a^2 = b^2 = c^2 = abc, a^4 = e> with elements ordered
/// (e, a, a2, a3, b, ab, a2b, a3b). Index i + 4j is a^i b^j, with b a = a^3 b
/// and b^2 = a^2; c = ab.
inline FiniteGroup quaternion_group() {
  Table t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int i = x % 4, j = x / 4, k = y % 4, l = y / 4;
      // a^i b^j a^k b^l = a^(i + (-1)^j k) b^(j + l), and b^2 = a^2.
      int power = ((j ? i - k : i + k) % 4 + 4) % 4;
      int b_power = j + l;
      if (b_power == 2) {
        power = (power + 2) % 4;
        b_power = 0;
      }
      t[x][y] = power + 4 * b_power;
    }
  return group_from_table(std::move(t), {"e", "a", "a2", "a3", "b", "ab", "a2b", "a3b"});
}

/// Quaternion group, H_0 = <a>, H_1 = <b>, z = (a, b), r = (b, a), kappa = id.
/// The built object has elements (H0*e, H0*b, H1*e, H1*a) and is isomorphic to
/// (R_4, antipodal map) via H0*e -> 0, H0*b -> 2, H1*e -> 1, H1*a -> 3.
inline CosetPresentation<FiniteGroup> paper_example_presentation() {
  FiniteGroup q8 = quaternion_group();
  const int a = *q8.find_name("a"), b = *q8.find_name("b");
  Subgroup h0 = subgroup_closure(q8, {a});
  Subgroup h1 = subgroup_closure(q8, {b});
  return CosetPresentation<FiniteGroup>{std::move(q8), {std::move(h0), std::move(h1)}, {a, b},
                                        {b, a}, {0, 1}};
}

}  // namespace sqk
