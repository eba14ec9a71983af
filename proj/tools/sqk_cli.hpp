#pragma once

// Command-line front end. Exit codes: 0 success / true, 1 clean negative
// (no isomorphism, a condition fails), 2 malformed input or usage, 3 size
// bound exceeded.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sqk/sqk.hpp"

namespace sqk::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kMalformed = 2, kTooLarge = 3 };

namespace detail {

inline std::string perm_line(const Perm& p) { return p.cycle_string() + "  " + p.array_string(); }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_group(std::ostream& out, const std::string& title, const PermGroup& g) {
  out << "group: " << title << '\n';
  out << "order: " << g.order() << '\n';
  out << "generators: " << g.generators().size() << '\n';
  for (int x : g.generators()) out << "  " << perm_line(g.element(x)) << '\n';
}

inline void print_orbits(std::ostream& out, const OrbitDecomposition& o) {
  out << "orbits: " << o.size() << '\n';
  for (int i = 0; i < o.size(); ++i) {
    out << "  " << i << ": {";
    for (std::size_t k = 0; k < o.orbits[i].size(); ++k) out << (k ? " " : "") << o.orbits[i][k];
    out << "} representative " << o.representatives[i] << '\n';
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Malformed, "cannot write '" + path + "'");
  f << text;
}

inline void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) out << text;
  else write_text(path, text);
}

inline int parse_positive(const std::string& token) {
  const auto v = io::detail::parse_int(token);
  if (!v) throw Error(ErrorKind::Malformed, "offending token '" + token + "' is not an integer");
  return *v;
}

/// Group names for `catalog conj ...`: quaternion|Q8, cyclic n|Zn,
/// dihedral-group n|Dn, sym n|Sn.
inline FiniteGroup catalog_group(const std::vector<std::string>& args, std::size_t& pos) {
  if (pos >= args.size()) throw Error(ErrorKind::Malformed, "missing group name");
  const std::string name = args[pos++];
  auto param = [&]() {
    if (pos >= args.size())
      throw Error(ErrorKind::Malformed, "group '" + name + "' needs a parameter");
    return parse_positive(args[pos++]);
  };
  if (name == "quaternion" || name == "Q8") return quaternion_group();
  if (name == "cyclic") return cyclic_group(param());
  if (name == "dihedral-group") return dihedral_group(param());
  if (name == "sym") return symmetric_group(param());
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'D' || name[0] == 'S')) {
    const int n = parse_positive(name.substr(1));
    if (name[0] == 'Z') return cyclic_group(n);
    if (name[0] == 'D') return dihedral_group(n);
    return symmetric_group(n);
  }
  throw Error(ErrorKind::Malformed, "offending token '" + name + "' is not a catalog group");
}

inline std::string catalog_text(const std::vector<std::string>& args) {
  if (args.empty()) throw Error(ErrorKind::Malformed, "missing catalog name");
  std::size_t pos = 1;
  const std::string& name = args[0];
  auto param = [&]() {
    if (pos >= args.size()) throw Error(ErrorKind::Malformed, "'" + name + "' needs a parameter");
    return parse_positive(args[pos++]);
  };
  std::string text;
  if (name == "dihedral-quandle") {
    const int n = param();
    text = io::format_quandle(dihedral_quandle(n), nullptr, {"dihedral quandle R_" + std::to_string(n)});
  } else if (name == "trivial-quandle") {
    const int n = param();
    text = io::format_quandle(trivial_quandle(n), nullptr, {"trivial quandle of order " + std::to_string(n)});
  } else if (name == "antipodal") {
    const int n = param();
    text = io::format_symmetric_quandle(antipodal(n), {"R_" + std::to_string(n) + " with x -> x + " +
                                                       std::to_string(n / 2)});
  } else if (name == "conj") {
    const std::size_t start = pos;
    const FiniteGroup g = catalog_group(args, pos);
    std::string spec;
    for (std::size_t k = start; k < pos; ++k) spec += (spec.empty() ? "" : " ") + args[k];
    std::vector<std::string> comments{"conjugation quandle of " + spec + " with inversion"};
    std::string legend = "elements:";
    for (int x = 0; x < g.order(); ++x) legend += " " + std::to_string(x) + "=" + g.element_name(x);
    comments.push_back(legend);
    text = io::format_symmetric_quandle(conj_symmetric_quandle(g), comments);
  } else if (name == "quaternion") {
    text = io::format_group(quaternion_group());
  } else if (name == "cyclic") {
    text = io::format_group(cyclic_group(param()));
  } else if (name == "dihedral-group") {
    text = io::format_group(dihedral_group(param()));
  } else if (name == "sym") {
    text = io::format_group(symmetric_group(param()));
  } else if (name == "paper-example") {
    text = io::format_presentation(paper_example_presentation(),
                                   {"quaternion group, H0 = <a>, H1 = <b>, z = (a, b), r = (b, a)"});
  } else {
    throw Error(ErrorKind::Malformed, "offending token '" + name + "' is not a catalog name");
  }
  if (pos != args.size())
    throw Error(ErrorKind::Malformed, "offending token '" + args[pos] + "' is unexpected");
  return text;
}

struct LoadedQuandle {
  io::QuandleFile file;
  Quandle quandle;
  std::optional<SymmetricQuandle> symmetric;
};

/// Parses a .qnd and validates it as a quandle (or rack, per its header) and,
/// when a rho line is present, as a symmetric quandle.
inline LoadedQuandle load(const std::string& path) {
  LoadedQuandle l;
  l.file = io::parse_quandle_file(io::read_file(path));
  l.quandle = quandle_from_table(l.file.table, l.file.rack_header);
  if (l.file.rho) l.symmetric = attach_involution(l.quandle, *l.file.rho);
  return l;
}

inline const SymmetricQuandle& require_rho(const LoadedQuandle& l, const std::string& verb) {
  if (!l.symmetric) throw Error(ErrorKind::Malformed, verb + " needs a file with a 'rho:' line");
  return *l.symmetric;
}

inline GroupChoice parse_group_choice(const std::string& s) {
  if (s == "inn") return GroupChoice::Inn;
  if (s == "aut") return GroupChoice::Aut;
  throw Error(ErrorKind::Malformed, "offending token '" + s + "' (expected inn or aut)");
}

inline int cmd_check(const std::string& path, std::ostream& out) {
  const auto file = io::parse_quandle_file(io::read_file(path));
  const int n = static_cast<int>(file.table.size());
  out << "order: " << n << '\n';
  out << "header: " << (file.rack_header ? "rack" : "quandle") << '\n';
  std::optional<Quandle> q;
  try {
    q = quandle_from_table(file.table, true);
    out << "rack: yes\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::AxiomQ2Violated && e.kind() != ErrorKind::AxiomQ3Violated) throw;
    out << "rack: no (" << e.what() << ")\n";
    out << "quandle: no\n";
    return kNegative;
  }
  bool ok = true;
  if (q->is_rack_only()) {
    std::string why;
    try {
      quandle_from_table(file.table, false);
    } catch (const Error& e) {
      why = e.what();
    }
    out << "quandle: no (" << why << ")\n";
    out << "kei: no\n";
    ok = file.rack_header;
  } else {
    out << "quandle: yes\n";
    out << "kei: " << yes_no(is_kei(*q)) << '\n';
  }
  if (file.rho) {
    out << "rho:";
    for (int x : *file.rho) out << ' ' << x;
    out << '\n';
    bool good = false;
    std::string why;
    try {
      attach_involution(*q, *file.rho);
      good = true;
    } catch (const Error& e) {
      why = e.what();
    }
    out << "good involution: " << yes_no(good) << (good ? "" : " (" + why + ")") << '\n';
    ok = ok && good;
  }
  return ok ? kOk : kNegative;
}

inline int cmd_involutions(const std::string& path, int max_n, std::ostream& out) {
  const auto l = load(path);
  const auto invs = enumerate_good_involutions(l.quandle, max_n);
  out << "good involutions: " << invs.size() << '\n';
  for (const auto& p : invs) out << perm_line(p) << '\n';
  return kOk;
}

inline int cmd_aut(const std::string& path, bool symmetric, int max_n, std::ostream& out) {
  const auto l = load(path);
  const PermGroup g = symmetric ? symmetric_aut_group(require_rho(l, "aut --symmetric"), max_n)
                                : aut_group(l.quandle, max_n);
  print_group(out, symmetric ? "Aut(Q,rho)" : "Aut(Q)", g);
  print_orbits(out, orbits(g));
  return kOk;
}

inline int cmd_inn(const std::string& path, std::ostream& out) {
  const auto l = load(path);
  const PermGroup g = inner_group(require_rho(l, "inn"));
  print_group(out, "Inn(Q,rho)", g);
  print_orbits(out, orbits(g));
  return kOk;
}

inline int cmd_orbits(const std::string& path, const std::string& choice, int max_n, std::ostream& out) {
  const auto l = load(path);
  const GroupChoice c = parse_group_choice(choice);
  PermGroup g;
  std::string title;
  if (c == GroupChoice::Inn) {
    g = inner_group(l.quandle);
    title = l.symmetric ? "Inn(Q,rho)" : "Inn(Q)";
  } else if (l.symmetric) {
    g = symmetric_aut_group(*l.symmetric, max_n);
    title = "Aut(Q,rho)";
  } else {
    g = aut_group(l.quandle, max_n);
    title = "Aut(Q)";
  }
  out << "group: " << title << '\n' << "order: " << g.order() << '\n';
  print_orbits(out, orbits(g));
  return kOk;
}

inline int cmd_decompose(const std::string& path, const std::string& choice, const std::string& emit_prs,
                  int max_n, std::ostream& out) {
  const auto l = load(path);
  const auto& s = require_rho(l, "decompose");
  const GroupChoice c = parse_group_choice(choice);
  const auto d = decompose(s, c, max_n);
  const auto& p = d.presentation;
  const auto& g = p.group;

  print_group(out, c == GroupChoice::Inn ? "Inn(Q,rho)" : "Aut(Q,rho)", g);
  out << "orbit table: " << p.orbit_count() << " orbit(s)\n";
  out << "  i q_i |Q_i| |H_i| kappa(i)\n";
  for (int i = 0; i < p.orbit_count(); ++i)
    out << "  " << i << ' ' << d.orbit_representatives[i] << ' ' << d.orbit_sizes[i] << ' '
        << p.subgroups[i].order() << ' ' << p.kappa[i] << '\n';
  out << "kappa:";
  for (int k : p.kappa) out << ' ' << k;
  out << '\n';
  for (int i = 0; i < p.orbit_count(); ++i) {
    out << "z_" << i << ": " << perm_line(g.element(p.z[i])) << '\n';
    out << "r_" << i << ": " << perm_line(g.element(p.r[i])) << '\n';
  }
  out << "psi:\n";
  for (std::size_t a = 0; a < d.built.labels.size(); ++a)
    out << "  " << a << " = " << label_string(g, d.built.labels[a]) << " -> "
        << d.psi.map[static_cast<int>(a)] << '\n';

  const auto report = verify_decomposition(s, d);
  out << "verification:\n";
  for (const auto& ch : report.checks)
    out << "  " << ch.name << ": " << (ch.passed ? "pass" : "FAIL " + ch.detail) << '\n';
  out << "verification failures: " << report.failures() << '\n';

  if (!emit_prs.empty()) {
    std::vector<std::string> comments{
        std::string("decomposition over ") + (c == GroupChoice::Inn ? "Inn" : "Aut") + "(Q,rho)",
        "group elements are permutations of the input; names give cycle notation"};
    write_text(emit_prs, io::format_presentation(io::to_table_presentation(p), comments));
  }
  return report.ok() ? kOk : kNegative;
}

inline int cmd_build(const std::string& path, const std::string& output, const std::string& level_name,
              std::ostream& out, std::ostream& err) {
  const auto p = io::parse_presentation(io::read_file(path),
                                        std::filesystem::path(path).parent_path());
  PresentationLevel level = PresentationLevel::Symmetric;
  if (level_name == "rack") level = PresentationLevel::Rack;
  else if (level_name == "quandle") level = PresentationLevel::Quandle;
  else if (level_name != "symmetric")
    throw Error(ErrorKind::Malformed, "offending token '" + level_name + "' is not a level");

  const auto report = validate_presentation(p, level);
  if (!report.ok()) {
    for (const auto& c : report.conditions)
      err << c.id << ": " << (c.passed ? "pass" : "FAIL at " + c.counterexample) << '\n';
    err << "sqk: presentation fails at " << to_string(level) << " level\n";
    return kNegative;
  }

  std::vector<std::string> comments{"built from " + std::filesystem::path(path).filename().string() +
                                    " at " + std::string(to_string(level)) + " level",
                                    "labels:"};
  std::string text;
  if (level == PresentationLevel::Symmetric) {
    const auto b = build_symmetric_quandle(p);
    for (std::size_t a = 0; a < b.labels.size(); ++a)
      comments.push_back("  " + std::to_string(a) + " = " + label_string(p.group, b.labels[a]));
    text = io::format_symmetric_quandle(b.sq, comments);
  } else {
    const auto b = level == PresentationLevel::Rack ? build_rack(p) : build_quandle(p);
    for (std::size_t a = 0; a < b.labels.size(); ++a)
      comments.push_back("  " + std::to_string(a) + " = " + label_string(p.group, b.labels[a]));
    text = io::format_quandle(b.quandle, nullptr, comments);
  }
  emit(out, output, text);
  return kOk;
}

inline int cmd_iso(const std::string& a, const std::string& b, bool symmetric, std::ostream& out) {
  const auto la = load(a);
  const auto lb = load(b);
  const auto iso = symmetric ? find_symmetric_isomorphism(require_rho(la, "iso --symmetric"),
                                                          require_rho(lb, "iso --symmetric"))
                             : find_quandle_isomorphism(la.quandle, lb.quandle);
  if (!iso) {
    out << (symmetric ? "symmetric " : "") << "isomorphism: none\n";
    return kNegative;
  }
  out << (symmetric ? "symmetric " : "") << "isomorphism: " << iso->map.array_string() << '\n';
  for (int x = 0; x < iso->map.degree(); ++x) out << "  " << x << " -> " << iso->map[x] << '\n';
  return kOk;
}

}  // namespace detail

/// Runs one `sqk` invocation; normal output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sqk: racks, quandles and symmetric quandles as coset structures", "sqk"};
  app.require_subcommand(1);
  int max_n = kDefaultMaxN;

  auto* check = app.add_subcommand("check", "check (Q1)-(Q3), kei, and the rho line if present");
  std::string check_file;
  check->add_option("file", check_file, ".qnd file")->required();

  auto* invol = app.add_subcommand("involutions", "enumerate good involutions");
  std::string invol_file;
  invol->add_option("file", invol_file, ".qnd file")->required();
  invol->add_option("--max-n", max_n, "largest order searched exhaustively");

  auto* aut = app.add_subcommand("aut", "automorphism group");
  std::string aut_file;
  bool aut_symmetric = false;
  aut->add_option("file", aut_file, ".qnd file")->required();
  aut->add_flag("--symmetric", aut_symmetric, "only automorphisms commuting with rho");
  aut->add_option("--max-n", max_n, "largest order searched exhaustively");

  auto* inn = app.add_subcommand("inn", "inner automorphism group (needs rho)");
  std::string inn_file;
  inn->add_option("file", inn_file, ".qnd file")->required();

  auto* orb = app.add_subcommand("orbits", "orbit decomposition under Inn or Aut");
  std::string orb_file, orb_group = "inn";
  orb->add_option("file", orb_file, ".qnd file")->required();
  orb->add_option("--group", orb_group, "inn or aut");
  orb->add_option("--max-n", max_n, "largest order searched exhaustively");

  auto* dec = app.add_subcommand("decompose", "coset presentation of a symmetric quandle");
  std::string dec_file, dec_group = "inn", dec_prs;
  dec->add_option("file", dec_file, ".qnd file with rho")->required();
  dec->add_option("--group", dec_group, "inn (default) or aut");
  dec->add_option("--emit-prs", dec_prs, "write the presentation to this .prs path");
  dec->add_option("--max-n", max_n, "largest order searched exhaustively");

  auto* build = app.add_subcommand("build", "build the coset structure of a .prs");
  std::string build_file, build_out, build_level = "symmetric";
  build->add_option("file", build_file, ".prs file")->required();
  build->add_option("-o,--output", build_out, "write the .qnd here instead of stdout");
  build->add_option("--level", build_level, "rack, quandle or symmetric (default)");

  auto* iso = app.add_subcommand("iso", "find an isomorphism between two quandles");
  std::string iso_a, iso_b;
  bool iso_symmetric = false;
  iso->add_option("a", iso_a, "first .qnd")->required();
  iso->add_option("b", iso_b, "second .qnd")->required();
  iso->add_flag("--symmetric", iso_symmetric, "also require f o rho = rho' o f");

  auto* cat = app.add_subcommand("catalog", "emit a catalog object as .qnd, .grp or .prs");
  std::vector<std::string> cat_args;
  std::string cat_out;
  cat->add_option("spec", cat_args, "name and parameters")->required();
  cat->add_option("-o,--output", cat_out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "sqk: " << msg << '\n';
    return kMalformed;
  }

  try {
    if (*check) return detail::cmd_check(check_file, out);
    if (*invol) return detail::cmd_involutions(invol_file, max_n, out);
    if (*aut) return detail::cmd_aut(aut_file, aut_symmetric, max_n, out);
    if (*inn) return detail::cmd_inn(inn_file, out);
    if (*orb) return detail::cmd_orbits(orb_file, orb_group, max_n, out);
    if (*dec) return detail::cmd_decompose(dec_file, dec_group, dec_prs, max_n, out);
    if (*build) return detail::cmd_build(build_file, build_out, build_level, out, err);
    if (*iso) return detail::cmd_iso(iso_a, iso_b, iso_symmetric, out);
    if (*cat) {
      detail::emit(out, cat_out, detail::catalog_text(cat_args));
      return kOk;
    }
  } catch (const Error& e) {
    err << "sqk: " << e.what() << '\n';
    if (e.kind() == ErrorKind::SizeBoundExceeded) return kTooLarge;
    if (e.kind() == ErrorKind::InternalVerificationFailed) return kNegative;
    return kMalformed;
  }
  return kMalformed;
}

}  // namespace sqk::cli
