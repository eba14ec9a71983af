#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sqk/error.hpp"
#include "sqk/group.hpp"
#include "sqk/perm.hpp"
#include "sqk/quandle.hpp"
#include "sqk/symmetric.hpp"

namespace sqk {

/// Group data (G; H_i, z_i, r_i, kappa) for the coset structure on the
/// disjoint union of right coset spaces H_i\G:
///
///   H_i x * H_j y = H_i x y^-1 z_j y,      rho(H_i x) = H_kappa(i) r_i x.
///
/// The single-subgroup case (H\G; z, r) is orbit_count() == 1, kappa = id.
template <GroupLike G>
struct CosetPresentation {
  G group;
  std::vector<Subgroup> subgroups;
  std::vector<int> z;
  std::vector<int> r;
  std::vector<int> kappa;

  int orbit_count() const noexcept { return static_cast<int>(subgroups.size()); }
};

template <GroupLike G>
CosetPresentation<G> single_coset_presentation(G group, Subgroup h, int z, int r) {
  CosetPresentation<G> p{std::move(group), {std::move(h)}, {z}, {r}, {0}};
  return p;
}

enum class PresentationLevel { Rack, Quandle, Symmetric };

inline std::string_view to_string(PresentationLevel level) {
  switch (level) {
    case PresentationLevel::Rack: return "rack";
    case PresentationLevel::Quandle: return "quandle";
    case PresentationLevel::Symmetric: return "symmetric";
  }
  return "?";
}

struct ConditionResult {
  std::string id;  ///< "C1" .. "C6"
  std::string statement;
  bool passed = true;
  std::string counterexample;  ///< empty when passed
};

struct PresentationReport {
  PresentationLevel level = PresentationLevel::Symmetric;
  std::vector<ConditionResult> conditions;  ///< all six, in order

  /// Conditions that the requested level depends on.
  static int required_count(PresentationLevel level) {
    switch (level) {
      case PresentationLevel::Rack: return 1;
      case PresentationLevel::Quandle: return 2;
      case PresentationLevel::Symmetric: return 6;
    }
    return 6;
  }

  bool ok() const {
    for (int k = 0; k < required_count(level); ++k)
      if (!conditions[k].passed) return false;
    return true;
  }

  const ConditionResult* first_failure() const {
    for (int k = 0; k < required_count(level); ++k)
      if (!conditions[k].passed) return &conditions[k];
    return nullptr;
  }
};

/// Structural well-formedness: matching lengths, indices in range, every H_i a
/// subgroup. Throws on violation.
template <GroupLike G>
void check_structure(const CosetPresentation<G>& p) {
  const auto k = static_cast<std::size_t>(p.orbit_count());
  if (k == 0) throw Error(ErrorKind::Malformed, "presentation has no orbits");
  if (p.z.size() != k || p.r.size() != k || p.kappa.size() != k)
    throw Error(ErrorKind::Malformed, "z, r and kappa must have one entry per orbit");
  for (std::size_t i = 0; i < k; ++i) {
    check_index(p.group, p.z[i]);
    check_index(p.group, p.r[i]);
    if (p.kappa[i] < 0 || static_cast<std::size_t>(p.kappa[i]) >= k)
      throw Error(ErrorKind::IndexOutOfRange, "kappa(" + std::to_string(i) + ") out of range",
                  {static_cast<int>(i)});
    if (!is_subgroup_of(p.group, p.subgroups[i]))
      throw Error(ErrorKind::NotASubgroup, "H_" + std::to_string(i) + " is not a subgroup",
                  {static_cast<int>(i)});
  }
}

/// Evaluates all six side conditions; the verdict covers those the level needs
/// (C1 for a rack, C1-C2 for a quandle, C1-C6 for a symmetric quandle).
template <GroupLike G>
PresentationReport validate_presentation(const CosetPresentation<G>& p,
                                         PresentationLevel level = PresentationLevel::Symmetric) {
  check_structure(p);
  const G& g = p.group;
  auto name = [&](int x) { return g.element_name(x); };
  const int k = p.orbit_count();

  PresentationReport report;
  report.level = level;
  report.conditions = {
      {"C1", "z_i^-1 h z_i = h for all h in H_i", true, {}},
      {"C2", "z_i in H_i", true, {}},
      {"C3", "r_i h r_i^-1 in H_kappa(i) for all h in H_i", true, {}},
      {"C4", "r_kappa(i) r_i in H_i", true, {}},
      {"C5", "z_i^-1 = r_i^-1 z_kappa(i) r_i", true, {}},
      {"C6", "kappa o kappa = id", true, {}},
  };
  auto fail = [&](int c, std::string what) {
    if (report.conditions[c].passed) {
      report.conditions[c].passed = false;
      report.conditions[c].counterexample = std::move(what);
    }
  };

  for (int i = 0; i < k; ++i) {
    const auto is = std::to_string(i);
    const int z = p.z[i], r = p.r[i], ki = p.kappa[i];
    for (int h : p.subgroups[i].elements())
      if (conjugate(g, h, z) != h) {
        fail(0, "i=" + is + ", h=" + name(h));
        break;
      }
    if (!p.subgroups[i].contains(z)) fail(1, "i=" + is + ", z=" + name(z));
    if (ki < k && p.kappa[ki] != i) fail(5, "kappa(kappa(" + is + ")) != " + is);
    for (int h : p.subgroups[i].elements())
      if (!p.subgroups[ki].contains(g.mul(g.mul(r, h), g.inv(r)))) {
        fail(2, "i=" + is + ", h=" + name(h));
        break;
      }
    if (!p.subgroups[i].contains(g.mul(p.r[ki], r)))
      fail(3, "i=" + is + ", r_kappa(i) r_i=" + name(g.mul(p.r[ki], r)));
    if (g.inv(z) != conjugate(g, p.z[ki], r))
      fail(4, "i=" + is + ": z^-1=" + name(g.inv(z)) + " but r^-1 z_kappa r=" +
                  name(conjugate(g, p.z[ki], r)));
  }
  return report;
}

/// Names the coset H_orbit * representative.
struct CosetLabel {
  int orbit = 0;
  int representative = 0;
  friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

/// Element numbering of the disjoint union: orbit index major, coset
/// representative minor.
template <GroupLike G>
class CosetIndexer {
 public:
  explicit CosetIndexer(const CosetPresentation<G>& p) {
    int offset = 0;
    for (const auto& h : p.subgroups) {
      spaces_.push_back(right_cosets(p.group, h));
      offsets_.push_back(offset);
      offset += spaces_.back().size();
    }
    total_ = offset;
    for (int i = 0; i < static_cast<int>(spaces_.size()); ++i)
      for (int rep : spaces_[i].representatives) labels_.push_back({i, rep});
  }

  int size() const noexcept { return total_; }
  /// Element index of the coset H_orbit * x.
  int element(int orbit, int x) const { return offsets_[orbit] + spaces_[orbit].coset_of[x]; }
  const CosetLabel& label(int element) const { return labels_[element]; }
  const std::vector<CosetLabel>& labels() const noexcept { return labels_; }
  const CosetSpace& space(int orbit) const { return spaces_[orbit]; }

 private:
  std::vector<CosetSpace> spaces_;
  std::vector<int> offsets_;
  std::vector<CosetLabel> labels_;
  int total_ = 0;
};

namespace detail {

/// H_i x * H_j y = H_i (x y^-1 z_j y), for a given choice of representatives.
template <GroupLike G>
int coset_op(const CosetPresentation<G>& p, const CosetIndexer<G>& idx, int i, int x, int j,
             int y) {
  const G& g = p.group;
  return idx.element(i, g.mul(x, conjugate(g, p.z[j], y)));
}

template <GroupLike G>
int coset_dual(const CosetPresentation<G>& p, const CosetIndexer<G>& idx, int i, int x, int j,
               int y) {
  const G& g = p.group;
  return idx.element(i, g.mul(x, conjugate(g, g.inv(p.z[j]), y)));
}

template <GroupLike G>
int coset_rho(const CosetPresentation<G>& p, const CosetIndexer<G>& idx, int i, int x) {
  return idx.element(p.kappa[i], p.group.mul(p.r[i], x));
}

}  // namespace detail

struct WellDefinednessReport {
  long long op_cells_checked = 0;
  long long rho_cells_checked = 0;
  bool joint = true;  ///< both arguments varied together (false: one at a time)
  bool ok = true;
  std::string first_mismatch;
};

/// Recomputes every cell of * (and rho, if requested) with every alternative
/// coset representative and compares against the canonical one. With `joint`
/// the two arguments of * vary together, otherwise one at a time.
template <GroupLike G>
WellDefinednessReport check_well_definedness(const CosetPresentation<G>& p, bool include_rho,
                                             bool joint = true) {
  const CosetIndexer<G> idx(p);
  WellDefinednessReport rep;
  rep.joint = joint;
  auto mismatch = [&](std::string what) {
    if (rep.ok) rep.first_mismatch = std::move(what);
    rep.ok = false;
  };
  const int n = idx.size();
  for (int a = 0; a < n; ++a) {
    const auto [i, x] = idx.label(a);
    const auto& xs = idx.space(i).cosets[idx.space(i).coset_of[x]];
    for (int b = 0; b < n; ++b) {
      const auto [j, y] = idx.label(b);
      const auto& ys = idx.space(j).cosets[idx.space(j).coset_of[y]];
      const int expected = detail::coset_op(p, idx, i, x, j, y);
      auto compare = [&](int x2, int y2) {
        ++rep.op_cells_checked;
        if (detail::coset_op(p, idx, i, x2, j, y2) != expected)
          mismatch("* at (" + std::to_string(a) + "," + std::to_string(b) + ") with representatives " +
                   p.group.element_name(x2) + ", " + p.group.element_name(y2));
      };
      if (joint) {
        for (int x2 : xs)
          for (int y2 : ys) compare(x2, y2);
      } else {
        for (int x2 : xs) compare(x2, y);
        for (int y2 : ys) compare(x, y2);
      }
    }
    if (include_rho) {
      const int expected = detail::coset_rho(p, idx, i, x);
      for (int x2 : xs) {
        ++rep.rho_cells_checked;
        if (detail::coset_rho(p, idx, i, x2) != expected)
          mismatch("rho at " + std::to_string(a) + " with representative " +
                   p.group.element_name(x2));
      }
    }
  }
  return rep;
}

struct LabeledQuandle {
  Quandle quandle;
  std::vector<CosetLabel> labels;
  WellDefinednessReport well_definedness;
};

struct LabeledSymmetricQuandle {
  SymmetricQuandle sq;
  std::vector<CosetLabel> labels;
  WellDefinednessReport well_definedness;
};

/// Upper bound on joint representative pairs before the well-definedness check
/// varies one argument at a time.
inline constexpr long long kJointCheckBudget = 20'000'000;

namespace detail {

template <GroupLike G>
void require_level(const CosetPresentation<G>& p, PresentationLevel level) {
  const auto report = validate_presentation(p, level);
  if (const auto* f = report.first_failure())
    throw Error(ErrorKind::PresentationInvalid, f->id + " (" + f->statement + ") fails at " +
                                                    f->counterexample);
}

template <GroupLike G>
LabeledQuandle build_table(const CosetPresentation<G>& p, PresentationLevel level) {
  require_level(p, level);
  const CosetIndexer<G> idx(p);
  const int n = idx.size();

  long long pairs = 0;
  for (int i = 0; i < p.orbit_count(); ++i)
    for (int j = 0; j < p.orbit_count(); ++j)
      pairs += static_cast<long long>(p.group.order()) * p.group.order();
  const auto wd = check_well_definedness(p, level == PresentationLevel::Symmetric,
                                         pairs <= kJointCheckBudget);
  if (!wd.ok)
    throw Error(ErrorKind::InternalVerificationFailed,
                "coset operation not well defined: " + wd.first_mismatch);

  Table op(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto la = idx.label(a), lb = idx.label(b);
      op[a][b] = coset_op(p, idx, la.orbit, la.representative, lb.orbit, lb.representative);
    }
  Quandle q = quandle_from_table(std::move(op), level == PresentationLevel::Rack);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto la = idx.label(a), lb = idx.label(b);
      if (q.dual(a, b) != coset_dual(p, idx, la.orbit, la.representative, lb.orbit, lb.representative))
        throw Error(ErrorKind::InternalVerificationFailed,
                    "dual table disagrees with H_i x y^-1 z_j^-1 y at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
    }
  return LabeledQuandle{std::move(q), idx.labels(), wd};
}

}  // namespace detail

/// (H_i\G; z_i) as a rack; only C1 is required.
template <GroupLike G>
LabeledQuandle build_rack(const CosetPresentation<G>& p) {
  return detail::build_table(p, PresentationLevel::Rack);
}

/// (H_i\G; z_i) as a quandle; C1 and C2 are required.
template <GroupLike G>
LabeledQuandle build_quandle(const CosetPresentation<G>& p) {
  return detail::build_table(p, PresentationLevel::Quandle);
}

/// (H_i\G; z_i, r_i) with rho(H_i x) = H_kappa(i) r_i x. All six conditions are
/// required; the resulting table and involution are re-validated from scratch.
template <GroupLike G>
LabeledSymmetricQuandle build_symmetric_quandle(const CosetPresentation<G>& p) {
  auto built = detail::build_table(p, PresentationLevel::Symmetric);
  const CosetIndexer<G> idx(p);
  std::vector<int> rho(built.labels.size());
  for (std::size_t a = 0; a < rho.size(); ++a)
    rho[a] = detail::coset_rho(p, idx, built.labels[a].orbit, built.labels[a].representative);
  SymmetricQuandle sq = attach_involution(std::move(built.quandle), rho);
  return LabeledSymmetricQuandle{std::move(sq), std::move(built.labels), built.well_definedness};
}

/// "H<i>*<name of representative>"
template <GroupLike G>
std::string label_string(const G& g, const CosetLabel& label) {
  return "H" + std::to_string(label.orbit) + "*" + g.element_name(label.representative);
}

}  // namespace sqk
