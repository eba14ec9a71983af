#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqk/automorphism.hpp"
#include "sqk/catalog.hpp"
#include "sqk/coset.hpp"
#include "sqk/error.hpp"
#include "sqk/group.hpp"
#include "sqk/symmetric.hpp"

namespace sqk {

enum class GroupChoice { Inn, Aut };

inline std::string_view to_string(GroupChoice c) { return c == GroupChoice::Inn ? "inn" : "aut"; }

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  int failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [](const CheckResult& c) { return !c.passed; }));
  }
  bool ok() const { return failures() == 0; }
  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

/// Checks that `psi` (built coset quandle -> s) is a symmetric quandle
/// isomorphism and that the presentation satisfies C1-C6.
template <GroupLike G>
VerificationReport verify_presentation_isomorphism(const SymmetricQuandle& s,
                                                   const CosetPresentation<G>& p,
                                                   const std::vector<int>& psi) {
  VerificationReport report;
  const auto conditions = validate_presentation(p, PresentationLevel::Symmetric);
  for (const auto& c : conditions.conditions) report.add(c.id, c.passed, c.counterexample);
  if (!conditions.ok()) return report;

  const auto built = build_symmetric_quandle(p);
  const Quandle& src = built.sq.quandle();
  const Quandle& dst = s.quandle();
  const int n = dst.order();

  const bool shape_ok = src.order() == n && static_cast<int>(psi.size()) == n;
  report.add("size", shape_ok,
             shape_ok ? "" : "built order " + std::to_string(src.order()) + ", psi length " +
                                 std::to_string(psi.size()) + ", target " + std::to_string(n));
  if (!shape_ok) return report;

  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  bool bijective = true;
  for (int a = 0; a < n && bijective; ++a) {
    if (psi[a] < 0 || psi[a] >= n || hit[psi[a]]) bijective = false;
    else hit[psi[a]] = 1;
  }
  report.add("psi bijective", bijective);
  if (!bijective) return report;

  std::string hom_detail;
  for (int a = 0; a < n && hom_detail.empty(); ++a)
    for (int b = 0; b < n; ++b)
      if (psi[src.op(a, b)] != dst.op(psi[a], psi[b])) {
        hom_detail = "psi(" + std::to_string(a) + "*" + std::to_string(b) + ") != psi(" +
                     std::to_string(a) + ")*psi(" + std::to_string(b) + ")";
        break;
      }
  report.add("psi homomorphism", hom_detail.empty(), hom_detail);

  std::string rho_detail;
  for (int a = 0; a < n; ++a)
    if (psi[built.sq.rho()[a]] != s.rho()[psi[a]]) {
      rho_detail = "psi(rho(" + std::to_string(a) + ")) != rho(psi(" + std::to_string(a) + "))";
      break;
    }
  report.add("psi commutes with rho", rho_detail.empty(), rho_detail);
  return report;
}

struct DecompositionResult {
  CosetPresentation<PermGroup> presentation;
  std::vector<int> orbit_representatives;  ///< q_i
  std::vector<int> orbit_sizes;            ///< |Q_i|
  LabeledSymmetricQuandle built;
  Isomorphism psi;  ///< built coset quandle -> input, H_i x -> q_i . x
  GroupChoice group_choice = GroupChoice::Inn;
  VerificationReport verification;
};

inline VerificationReport verify_decomposition(const SymmetricQuandle& s,
                                               const DecompositionResult& d) {
  std::vector<int> psi(d.psi.map.images().begin(), d.psi.map.images().end());
  return verify_presentation_isomorphism(s, d.presentation, psi);
}

/// Writes s as a disjoint union of coset spaces over Inn(Q, rho) (default) or
/// Aut(Q, rho):
///   q_i   least element of the i-th orbit,
///   H_i   stabilizer of q_i,
///   kappa(i) the orbit containing rho(q_i),
///   r_i   least g with q_kappa(i) . g = rho(q_i),
///   z_i   the translation s_{q_i},
/// and psi(H_i x) = q_i . x. The whole result is re-verified before returning.
inline DecompositionResult decompose(const SymmetricQuandle& s,
                                     GroupChoice choice = GroupChoice::Inn,
                                     int max_n = kDefaultMaxN,
                                     std::size_t max_order = kDefaultMaxGroupOrder) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::InternalVerificationFailed, what);
  };

  PermGroup group = choice == GroupChoice::Inn ? inner_group(s)
                                               : symmetric_aut_group(s, max_n, max_order);
  const auto orb = orbits(group);
  const int k = orb.size();

  DecompositionResult d;
  d.group_choice = choice;
  d.orbit_representatives = orb.representatives;
  for (const auto& o : orb.orbits) d.orbit_sizes.push_back(static_cast<int>(o.size()));

  std::vector<Subgroup> subgroups;
  std::vector<int> z(k), r(k), kappa(k);
  for (int i = 0; i < k; ++i) {
    const int q = orb.representatives[i];
    subgroups.push_back(stabilizer(group, q));
    const auto zi = group.index_of(s.quandle().translation_perm(q));
    if (!zi) fail("translation s_" + std::to_string(q) + " is not in the chosen group");
    z[i] = *zi;
  }
  for (int i = 0; i < k; ++i) {
    const int image = s.rho()[orb.representatives[i]];
    kappa[i] = orb.orbit_of[image];
    const auto g = transporter(group, orb.representatives[kappa[i]], image);
    if (!g) fail("no transporter into rho(q_" + std::to_string(i) + ")");
    r[i] = *g;
  }
  d.presentation = CosetPresentation<PermGroup>{std::move(group), std::move(subgroups), z, r, kappa};

  const auto conditions = validate_presentation(d.presentation, PresentationLevel::Symmetric);
  if (const auto* f = conditions.first_failure())
    fail("derived presentation violates " + f->id + " at " + f->counterexample);

  d.built = build_symmetric_quandle(d.presentation);
  std::vector<int> psi(d.built.labels.size());
  for (std::size_t a = 0; a < psi.size(); ++a) {
    const auto& label = d.built.labels[a];
    psi[a] = d.presentation.group.act(d.orbit_representatives[label.orbit], label.representative);
  }
  d.verification = verify_presentation_isomorphism(s, d.presentation, psi);
  if (!d.verification.ok()) {
    for (const auto& c : d.verification.checks)
      if (!c.passed) fail("decomposition check '" + c.name + "' failed: " + c.detail);
  }
  d.psi = Isomorphism{Perm(std::move(psi))};
  return d;
}

/// Coset presentation of (Conj(G), Inv(G)) over G itself: one orbit per
/// conjugacy class, with representatives g_i closed under inversion,
/// H_i = C_G(g_i), z_i = g_i, r_i = e, and kappa pairing each class with its
/// inverse class.
///
/// Representatives are chosen class by class: a class C != C^-1 takes its least
/// element and hands the inverse to C^-1; a class with C = C^-1 needs an element
/// with g^2 = e and takes the least one.
inline CosetPresentation<FiniteGroup> conj_presentation(const FiniteGroup& g) {
  const auto classes = conjugacy_classes(g);
  const int k = static_cast<int>(classes.size());
  std::vector<int> class_of(static_cast<std::size_t>(g.order()));
  for (int c = 0; c < k; ++c)
    for (int x : classes[c]) class_of[x] = c;

  std::vector<int> rep(static_cast<std::size_t>(k), -1);
  std::vector<int> kappa(static_cast<std::size_t>(k), -1);
  for (int c = 0; c < k; ++c) {
    const int partner = class_of[g.inv(classes[c].front())];
    if (partner == c || rep[c] >= 0) continue;
    rep[c] = classes[c].front();
    rep[partner] = g.inv(rep[c]);
    kappa[c] = partner;
    kappa[partner] = c;
  }
  for (int c = 0; c < k; ++c) {
    if (rep[c] >= 0) continue;
    for (int x : classes[c])
      if (g.inv(x) == x) {
        rep[c] = x;
        break;
      }
    if (rep[c] < 0) {
      std::string members;
      for (int x : classes[c]) members += (members.empty() ? "" : " ") + g.element_name(x);
      throw Error(ErrorKind::NoInversionClosedTransversal,
                  "class {" + members + "} equals its inverse class but contains no involution",
                  classes[c]);
    }
    kappa[c] = c;
  }

  CosetPresentation<FiniteGroup> p;
  p.group = g;
  for (int c = 0; c < k; ++c) p.subgroups.push_back(centralizer(g, rep[c]));
  p.z = rep;
  p.r.assign(static_cast<std::size_t>(k), g.identity());
  p.kappa = std::move(kappa);

  std::vector<int> psi(static_cast<std::size_t>(g.order()));
  {
    const CosetIndexer<FiniteGroup> idx(p);
    for (int a = 0; a < idx.size(); ++a)
      psi[a] = conjugate(g, p.z[idx.label(a).orbit], idx.label(a).representative);
  }
  const auto check = verify_presentation_isomorphism(conj_symmetric_quandle(g), p, psi);
  for (const auto& c : check.checks)
    if (!c.passed)
      throw Error(ErrorKind::InternalVerificationFailed,
                  "conjugation presentation check '" + c.name + "' failed: " + c.detail);
  return p;
}

/// psi(H_i x) = x^-1 g_i x for a presentation from conj_presentation, as a map
/// from built elements to group elements.
inline std::vector<int> conj_psi(const CosetPresentation<FiniteGroup>& p) {
  const CosetIndexer<FiniteGroup> idx(p);
  std::vector<int> psi(static_cast<std::size_t>(idx.size()));
  for (int a = 0; a < idx.size(); ++a) {
    const auto& l = idx.label(a);
    psi[a] = conjugate(p.group, p.z[l.orbit], l.representative);
  }
  return psi;
}

}  // namespace sqk
