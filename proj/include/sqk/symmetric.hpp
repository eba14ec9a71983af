#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqk/error.hpp"
#include "sqk/perm.hpp"
#include "sqk/quandle.hpp"

namespace sqk {

inline constexpr int kDefaultMaxN = 12;

/// A quandle together with a good involution rho:
///   rho o rho = id,  rho(a*b) = rho(a)*b,  a*rho(b) = a dual* b.
class SymmetricQuandle {
 public:
  const Quandle& quandle() const noexcept { return quandle_; }
  const Perm& rho() const noexcept { return rho_; }
  int order() const noexcept { return quandle_.order(); }

  friend bool operator==(const SymmetricQuandle&, const SymmetricQuandle&) = default;

 private:
  friend SymmetricQuandle attach_involution(Quandle q, const std::vector<int>& rho);

  Quandle quandle_;
  Perm rho_;
};

/// Checks the three good-involution conditions in order (involution,
/// equivariance, dual compatibility), reporting the first counterexample.
inline SymmetricQuandle attach_involution(Quandle q, const std::vector<int>& rho) {
  const int n = q.order();
  if (q.is_rack_only())
    throw Error(ErrorKind::AxiomQ1Violated, "a good involution needs a quandle, not a rack");
  if (static_cast<int>(rho.size()) != n)
    throw Error(ErrorKind::Malformed, "involution has " + std::to_string(rho.size()) +
                                          " entries, expected " + std::to_string(n));
  for (int a = 0; a < n; ++a)
    if (rho[a] < 0 || rho[a] >= n)
      throw Error(ErrorKind::IndexOutOfRange, "rho(" + std::to_string(a) + ") out of range", {a});
  for (int a = 0; a < n; ++a)
    if (rho[rho[a]] != a)
      throw Error(ErrorKind::NotInvolution, "rho(rho(" + std::to_string(a) + ")) != " +
                                                std::to_string(a),
                  {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rho[q.op(a, b)] != q.op(rho[a], b))
        throw Error(ErrorKind::NotEquivariant,
                    "rho(" + std::to_string(a) + "*" + std::to_string(b) + ") != rho(" +
                        std::to_string(a) + ")*" + std::to_string(b),
                    {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (q.op(a, rho[b]) != q.dual(a, b))
        throw Error(ErrorKind::NotDualCompatible,
                    std::to_string(a) + "*rho(" + std::to_string(b) + ") != " + std::to_string(a) +
                        " dual* " + std::to_string(b),
                    {a, b});
  SymmetricQuandle s;
  s.quandle_ = std::move(q);
  s.rho_ = Perm(rho);
  return s;
}

inline bool is_good_involution(const Quandle& q, const std::vector<int>& rho) {
  try {
    attach_involution(q, rho);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// All good involutions of `q` in lexicographic order of their image arrays.
///
/// rho(b) is only drawn from C_b = {c : s_c = s_b^-1}, which the dual
/// compatibility condition forces; equivariance is checked on each candidate.
inline std::vector<Perm> enumerate_good_involutions(const Quandle& q, int max_n = kDefaultMaxN) {
  const int n = q.order();
  if (n > max_n)
    throw Error(ErrorKind::SizeBoundExceeded,
                "order " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(max_n));
  if (q.is_rack_only()) return {};

  std::vector<std::vector<int>> allowed(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) {
    const Perm inverse = q.translation_perm(b).inverse();
    for (int c = 0; c < n; ++c)
      if (q.translation_perm(c) == inverse) allowed[b].push_back(c);
  }

  std::vector<Perm> out;
  std::vector<int> rho(static_cast<std::size_t>(n), -1);
  auto recurse = [&](auto&& self, int b) -> void {
    while (b < n && rho[b] >= 0) ++b;
    if (b == n) {
      if (is_good_involution(q, rho)) out.emplace_back(rho);
      return;
    }
    for (int c : allowed[b]) {
      if (c < b || rho[c] >= 0) continue;
      rho[b] = c;
      rho[c] = b;
      self(self, b + 1);
      rho[b] = -1;
      rho[c] = -1;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Lexicographically least quandle isomorphism f with f o rho1 = rho2 o f.
inline std::optional<Isomorphism> find_symmetric_isomorphism(const SymmetricQuandle& source,
                                                             const SymmetricQuandle& target) {
  std::optional<Isomorphism> found;
  detail::for_each_isomorphism(source.quandle(), target.quandle(), &source.rho(), &target.rho(),
                               [&](const std::vector<int>& m) {
                                 found = Isomorphism{Perm(m)};
                                 return false;
                               });
  if (found) {
    const Perm& f = found->map;
    bool ok = is_homomorphism(source.quandle(), target.quandle(), f);
    for (int a = 0; ok && a < source.order(); ++a) ok = f[source.rho()[a]] == target.rho()[f[a]];
    if (!ok)
      throw Error(ErrorKind::InternalVerificationFailed,
                  "symmetric isomorphism search returned an invalid map");
  }
  return found;
}

}  // namespace sqk
