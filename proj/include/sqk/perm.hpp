#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "sqk/error.hpp"

namespace sqk {

/// A permutation of {0, ..., n-1} stored as its image array, p[a] = p(a).
///
/// Products follow the right-action convention used throughout the library:
/// `p.then(q)` is "apply p, then q", so a.(p.q) = (a.p).q = q(p(a)).
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t a = 0; a < images_.size(); ++a) {
      const int b = images_[a];
      if (b < 0 || static_cast<std::size_t>(b) >= images_.size() || seen[b]) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "image array is not a permutation at position " + std::to_string(a),
                    {static_cast<int>(a)});
      }
      seen[b] = 1;
    }
  }

  Perm(std::initializer_list<int> images) : Perm(std::vector<int>(images)) {}

  static Perm identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Perm(std::move(images));
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator[](int a) const { return images_[static_cast<std::size_t>(a)]; }
  int operator()(int a) const { return images_[static_cast<std::size_t>(a)]; }
  std::span<const int> images() const noexcept { return images_; }

  /// "apply *this, then next"
  Perm then(const Perm& next) const {
    std::vector<int> images(images_.size());
    for (std::size_t a = 0; a < images_.size(); ++a) images[a] = next[images_[a]];
    Perm out;
    out.images_ = std::move(images);
    return out;
  }

  Perm inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t a = 0; a < images_.size(); ++a) images[images_[a]] = static_cast<int>(a);
    Perm out;
    out.images_ = std::move(images);
    return out;
  }

  bool is_identity() const noexcept {
    for (std::size_t a = 0; a < images_.size(); ++a)
      if (images_[a] != static_cast<int>(a)) return false;
    return true;
  }

  bool is_involution() const noexcept {
    for (std::size_t a = 0; a < images_.size(); ++a)
      if (images_[images_[a]] != static_cast<int>(a)) return false;
    return true;
  }

  /// Disjoint cycles, each starting at its least point, ordered by that point.
  /// Fixed points are included as 1-cycles.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      for (int a = static_cast<int>(start); !seen[a]; a = images_[a]) {
        seen[a] = 1;
        cycle.push_back(a);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Sorted cycle lengths (including 1-cycles).
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  /// Cycle notation without fixed points, e.g. "(0 2)(1 3)"; "()" for the identity.
  std::string cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      any = true;
      os << '(';
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
      os << ')';
    }
    return any ? os.str() : "()";
  }

  /// Whitespace-free cycle notation, e.g. "(0,2)(1,3)"; usable as a name token.
  std::string cycle_token() const {
    std::string s = cycle_string();
    std::replace(s.begin(), s.end(), ' ', ',');
    return s;
  }

  /// Array notation, e.g. "[2 3 0 1]".
  std::string array_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t a = 0; a < images_.size(); ++a) os << (a ? " " : "") << images_[a];
    os << ']';
    return os.str();
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace sqk
