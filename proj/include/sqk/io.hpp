#pragma once

// Text formats. All are line oriented; '#' starts a comment that runs to the
// end of the line, and blank lines are ignored.
//
//   .grp   group <n>
//          <n rows of n indices>          row x, column y holds x.y ("x then y")
//          [names: <n whitespace-free tokens>]
//
//   .qnd   quandle <n>    (or: rack <n>)
//          <n rows of n indices>          row a, column b holds a*b
//          [rho: <n indices>]
//
//   .prs   presentation <k>
//          group <path.grp>               (relative to the .prs file)
//            or an inline .grp block starting with "group <n>"
//          orbit <i>: H = <indices> ; z = <index> ; r = <index> ; kappa = <j>
//          ... one line per orbit, i = 0..k-1
//
// Element tokens in a .prs orbit line may be indices or group element names.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sqk/coset.hpp"
#include "sqk/error.hpp"
#include "sqk/group.hpp"
#include "sqk/perm.hpp"
#include "sqk/quandle.hpp"
#include "sqk/symmetric.hpp"

namespace sqk::io {

namespace detail {

struct Line {
  int number = 0;
  std::string text;  ///< comment stripped, trimmed, non-empty
};

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({number, raw});
  }
  return out;
}

[[noreturn]] inline void malformed(const Line& line, const std::string& what) {
  throw Error(ErrorKind::Malformed, "line " + std::to_string(line.number) + ": " + what + " near '" +
                                        line.text + "'");
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline std::optional<int> parse_int(const std::string& token) {
  if (token.empty() || token.size() > 9) return std::nullopt;
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return std::stoi(token);
}

inline std::vector<int> int_row(const Line& line, const std::string& body, int expected) {
  std::vector<int> row;
  for (const auto& t : tokens(body)) {
    const auto v = parse_int(t);
    if (!v) malformed(line, "offending token '" + t + "' is not a non-negative integer");
    row.push_back(*v);
  }
  if (expected >= 0 && static_cast<int>(row.size()) != expected)
    malformed(line, "expected " + std::to_string(expected) + " entries, found " +
                        std::to_string(row.size()));
  return row;
}

/// "<keyword> <n>" header.
inline int header(const Line& line, const std::string& keyword) {
  const auto t = tokens(line.text);
  if (t.size() != 2 || t[0] != keyword) malformed(line, "expected '" + keyword + " <n>'");
  const auto n = parse_int(t[1]);
  if (!n || *n < 1) malformed(line, "offending token '" + t[1] + "' is not a positive size");
  return *n;
}

inline Table read_rows(const std::vector<Line>& lines, std::size_t& pos, int n) {
  Table t;
  for (int row = 0; row < n; ++row) {
    if (pos >= lines.size())
      throw Error(ErrorKind::Malformed, "table ends after " + std::to_string(row) + " of " +
                                            std::to_string(n) + " rows");
    t.push_back(int_row(lines[pos], lines[pos].text, n));
    ++pos;
  }
  return t;
}

/// "key: rest" -> rest, when the line starts with the key.
inline std::optional<std::string> keyed(const Line& line, const std::string& key) {
  if (line.text.rfind(key + ":", 0) != 0) return std::nullopt;
  return line.text.substr(key.size() + 1);
}

inline FiniteGroup parse_group_lines(const std::vector<Line>& lines, std::size_t& pos) {
  if (pos >= lines.size()) throw Error(ErrorKind::Malformed, "missing 'group <n>' header");
  const int n = header(lines[pos++], "group");
  Table t = read_rows(lines, pos, n);
  std::vector<std::string> names;
  if (pos < lines.size()) {
    if (auto rest = keyed(lines[pos], "names")) {
      names = tokens(*rest);
      if (static_cast<int>(names.size()) != n)
        malformed(lines[pos], "expected " + std::to_string(n) + " names");
      ++pos;
    }
  }
  return group_from_table(std::move(t), std::move(names));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Malformed, "cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_rows(std::ostream& os, const Table& t) {
  for (const auto& row : t) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << '\n';
  }
}

}  // namespace detail

inline FiniteGroup parse_group(const std::string& text) {
  const auto lines = detail::significant_lines(text);
  std::size_t pos = 0;
  FiniteGroup g = detail::parse_group_lines(lines, pos);
  if (pos != lines.size()) detail::malformed(lines[pos], "unexpected trailing content");
  return g;
}

inline std::string format_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << "group " << g.order() << '\n';
  detail::write_rows(os, g.table());
  if (g.has_names()) {
    os << "names:";
    for (const auto& n : g.names()) os << ' ' << n;
    os << '\n';
  }
  return os.str();
}

/// Raw contents of a .qnd file, before any axiom checking.
struct QuandleFile {
  bool rack_header = false;
  Table table;
  std::optional<std::vector<int>> rho;
};

inline QuandleFile parse_quandle_file(const std::string& text) {
  const auto lines = detail::significant_lines(text);
  if (lines.empty()) throw Error(ErrorKind::Malformed, "empty quandle file");
  QuandleFile f;
  const auto head = detail::tokens(lines[0].text);
  f.rack_header = !head.empty() && head[0] == "rack";
  const int n = detail::header(lines[0], f.rack_header ? "rack" : "quandle");
  std::size_t pos = 1;
  f.table = detail::read_rows(lines, pos, n);
  if (pos < lines.size()) {
    if (auto rest = detail::keyed(lines[pos], "rho")) {
      f.rho = detail::int_row(lines[pos], *rest, n);
      ++pos;
    }
  }
  if (pos != lines.size()) detail::malformed(lines[pos], "unexpected trailing content");
  return f;
}

/// Parses and validates; a `rack` header permits (Q1) to fail.
inline Quandle parse_quandle(const std::string& text) {
  auto f = parse_quandle_file(text);
  return quandle_from_table(std::move(f.table), f.rack_header);
}

/// Parses a .qnd that must carry a rho line.
inline SymmetricQuandle parse_symmetric_quandle(const std::string& text) {
  auto f = parse_quandle_file(text);
  if (!f.rho) throw Error(ErrorKind::Malformed, "file has no 'rho:' line");
  return attach_involution(quandle_from_table(std::move(f.table), f.rack_header), *f.rho);
}

/// Writes a .qnd. `comments` lines are emitted first, each prefixed with "# ".
inline std::string format_quandle(const Quandle& q, const Perm* rho = nullptr,
                                  const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << (q.is_rack_only() ? "rack " : "quandle ") << q.order() << '\n';
  detail::write_rows(os, q.table());
  if (rho) {
    os << "rho:";
    for (int x : rho->images()) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

inline std::string format_symmetric_quandle(const SymmetricQuandle& s,
                                            const std::vector<std::string>& comments = {}) {
  return format_quandle(s.quandle(), &s.rho(), comments);
}

/// Parses a .prs; a `group <path>` line is resolved against `base_dir`.
inline CosetPresentation<FiniteGroup> parse_presentation(
    const std::string& text, const std::filesystem::path& base_dir = ".") {
  const auto lines = detail::significant_lines(text);
  if (lines.empty()) throw Error(ErrorKind::Malformed, "empty presentation file");
  const int k = detail::header(lines[0], "presentation");
  std::size_t pos = 1;
  if (pos >= lines.size()) throw Error(ErrorKind::Malformed, "missing group line");

  CosetPresentation<FiniteGroup> p;
  {
    const auto t = detail::tokens(lines[pos].text);
    if (t.size() != 2 || t[0] != "group") detail::malformed(lines[pos], "expected 'group ...'");
    if (detail::parse_int(t[1])) {
      p.group = detail::parse_group_lines(lines, pos);
    } else {
      p.group = parse_group(detail::read_file(base_dir / t[1]));
      ++pos;
    }
  }

  auto element = [&](const detail::Line& line, const std::string& token) {
    if (auto v = detail::parse_int(token)) {
      if (*v >= p.group.order()) detail::malformed(line, "offending token '" + token + "' out of range");
      return *v;
    }
    if (auto v = p.group.find_name(token)) return *v;
    detail::malformed(line, "offending token '" + token + "' is not an element");
  };

  for (int i = 0; i < k; ++i) {
    if (pos >= lines.size())
      throw Error(ErrorKind::Malformed, "expected " + std::to_string(k) + " orbit lines, found " +
                                            std::to_string(i));
    const auto& line = lines[pos++];
    const std::string prefix = "orbit " + std::to_string(i) + ":";
    if (line.text.rfind(prefix, 0) != 0) detail::malformed(line, "expected '" + prefix + "'");
    std::string body = line.text.substr(prefix.size());
    std::vector<std::string> fields;
    std::istringstream fs(body);
    std::string field;
    while (std::getline(fs, field, ';')) fields.push_back(detail::trim(field));
    if (fields.size() != 4) detail::malformed(line, "expected 'H = ... ; z = ... ; r = ... ; kappa = ...'");

    auto value_of = [&](const std::string& f, const std::string& key) {
      const auto eq = f.find('=');
      if (eq == std::string::npos || detail::trim(f.substr(0, eq)) != key)
        detail::malformed(line, "expected '" + key + " = ...'");
      return detail::tokens(f.substr(eq + 1));
    };
    std::vector<int> h;
    for (const auto& t : value_of(fields[0], "H")) h.push_back(element(line, t));
    const auto z = value_of(fields[1], "z");
    const auto r = value_of(fields[2], "r");
    const auto kappa = value_of(fields[3], "kappa");
    if (z.size() != 1 || r.size() != 1 || kappa.size() != 1)
      detail::malformed(line, "z, r and kappa take exactly one value each");
    const auto kv = detail::parse_int(kappa[0]);
    if (!kv || *kv >= k) detail::malformed(line, "offending token '" + kappa[0] + "' is not an orbit index");
    try {
      p.subgroups.push_back(make_subgroup(p.group, std::move(h)));
    } catch (const Error& e) {
      detail::malformed(line, std::string("H is not a subgroup (") + e.what() + ")");
    }
    p.z.push_back(element(line, z[0]));
    p.r.push_back(element(line, r[0]));
    p.kappa.push_back(*kv);
  }
  if (pos != lines.size()) detail::malformed(lines[pos], "unexpected trailing content");
  return p;
}

/// Writes a .prs with the group inline; element tokens are indices.
inline std::string format_presentation(const CosetPresentation<FiniteGroup>& p,
                                       const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "presentation " << p.orbit_count() << '\n';
  os << format_group(p.group);
  for (int i = 0; i < p.orbit_count(); ++i) {
    os << "orbit " << i << ": H =";
    for (int h : p.subgroups[i].elements()) os << ' ' << h;
    os << " ; z = " << p.z[i] << " ; r = " << p.r[i] << " ; kappa = " << p.kappa[i] << '\n';
  }
  return os.str();
}

/// Cayley table of any group model, keeping its element indices and names.
template <GroupLike G>
FiniteGroup to_finite_group(const G& g) {
  Table t(static_cast<std::size_t>(g.order()), std::vector<int>(static_cast<std::size_t>(g.order())));
  std::vector<std::string> names;
  for (int x = 0; x < g.order(); ++x) {
    names.push_back(g.element_name(x));
    for (int y = 0; y < g.order(); ++y) t[x][y] = g.mul(x, y);
  }
  return group_from_table(std::move(t), std::move(names));
}

template <GroupLike G>
CosetPresentation<FiniteGroup> to_table_presentation(const CosetPresentation<G>& p) {
  return CosetPresentation<FiniteGroup>{to_finite_group(p.group), p.subgroups, p.z, p.r, p.kappa};
}

inline std::string read_file(const std::filesystem::path& path) { return detail::read_file(path); }

}  // namespace sqk::io
