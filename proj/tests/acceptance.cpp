// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.
//
//   acceptance <path to sqk binary> <fixtures dir>

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sqk/sqk.hpp"

namespace fs = std::filesystem;
using namespace sqk;

namespace {

std::vector<int> images(const Perm& p) { return {p.images().begin(), p.images().end()}; }

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct Command {
  int status;
  std::string out;
};

Command shell(const std::string& cmd) {
  Command c{-1, {}};
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') out += line + '\n';
  return out;
}

bool external_group(const std::string& body) {
  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("group ", 0) == 0) return !std::isdigit(static_cast<unsigned char>(line[6]));
  return false;
}

std::vector<Quandle> theorem_corpus() {
  std::vector<Quandle> qs;
  for (int n = 1; n <= 10; ++n) qs.push_back(dihedral_quandle(n));
  for (int n = 2; n <= 6; ++n) qs.push_back(conj_quandle(cyclic_group(n)));
  qs.push_back(conj_quandle(symmetric_group(3)));
  qs.push_back(conj_quandle(dihedral_group(4)));
  qs.push_back(conj_quandle(quaternion_group()));
  return qs;
}

// Presentations produced by criteria 1-3, for criterion 7.
std::vector<CosetPresentation<FiniteGroup>> table_presentations;
std::vector<CosetPresentation<PermGroup>> perm_presentations;

std::string sqk_binary;
fs::path fixtures;

void criterion1() {
  // the catalog text is what `sqk catalog paper-example` prints
  const auto cat = shell(quote(sqk_binary) + " catalog paper-example");
  require(cat.status == 0, "catalog paper-example exited " + std::to_string(cat.status));
  const auto p = io::parse_presentation(cat.out);
  require(p.group == quaternion_group(), "catalog group is not the quaternion table");
  const auto report = validate_presentation(p);
  for (const auto& c : report.conditions) require(c.passed, c.id + " fails: " + c.counterexample);

  const auto built = build_symmetric_quandle(p);
  const auto& q = built.sq.quandle();
  require(q.order() == 4, "built order != 4");
  const int a = *p.group.find_name("a"), b = *p.group.find_name("b");
  require(built.labels == std::vector<CosetLabel>{{0, 0}, {0, b}, {1, 0}, {1, a}}, "unexpected labels");
  require(q.op(0, 1) == 0, "H0e * H0b != H0e");
  require(q.op(0, 2) == 1, "H0e * H1e != H0b");
  require(q.op(2, 3) == 2, "H1e * H1a != H1e");
  require(q.op(2, 0) == 3, "H1e * H0e != H1a");

  const auto iso = find_symmetric_isomorphism(built.sq, antipodal(4));
  require(iso.has_value(), "no symmetric isomorphism to antipodal(4)");
  require(images(iso->map) == std::vector<int>{0, 2, 1, 3}, "psi != (0, 2, 1, 3)");
  require(verify_presentation_isomorphism(antipodal(4), p, {0, 2, 1, 3}).ok(), "psi fails verification");
  table_presentations.push_back(p);
}

void criterion2() {
  int checked = 0;
  for (const auto& q : theorem_corpus())
    for (const auto& rho : enumerate_good_involutions(q)) {
      const auto s = attach_involution(q, images(rho));
      const auto d = decompose(s, GroupChoice::Inn);
      const auto report = verify_decomposition(s, d);
      require(report.failures() == 0, "verification failures for order " + std::to_string(q.order()));
      perm_presentations.push_back(d.presentation);
      ++checked;
    }
  require(checked > 0, "empty corpus");
  std::cout << "    (" << checked << " symmetric quandles decomposed)\n";
}

void criterion3() {
  const auto s = antipodal(4);
  const auto aut = decompose(s, GroupChoice::Aut);
  require(aut.presentation.orbit_count() == 1, "aut: orbit_count != 1");
  require(aut.presentation.group.order() == 8, "aut: |G| != 8");
  require(aut.presentation.subgroups[0].order() == 2, "aut: |H| != 2");
  const auto inn = decompose(s, GroupChoice::Inn);
  require(inn.presentation.orbit_count() == 2, "inn: orbit_count != 2");
  require(inn.presentation.group.order() == 4, "inn: |G| != 4");
  for (const auto& h : inn.presentation.subgroups) require(h.order() == 2, "inn: |H_i| != 2");
  // brute-force counts behind the expected values
  const auto r = images(s.rho());
  require(oracle::automorphisms(s.quandle().table(), &r).size() == 8, "oracle |Aut(R4, rho)| != 8");
  perm_presentations.push_back(aut.presentation);
  perm_presentations.push_back(inn.presentation);
}

void criterion4() {
  const auto r4 = enumerate_good_involutions(dihedral_quandle(4));
  std::vector<std::vector<int>> got;
  for (const auto& p : r4) got.push_back(images(p));
  const std::vector<std::vector<int>> expected = {{0, 1, 2, 3}, {0, 3, 2, 1}, {2, 1, 0, 3}, {2, 3, 0, 1}};
  require(got == expected, "R4 involutions differ from {id, (1 3), (0 2), (0 2)(1 3)}");
  require(oracle::all_involutions(4).size() == 10, "oracle does not see 10 involutions");
  require(oracle::good_involutions(dihedral_quandle(4).table()) == expected, "oracle disagrees on R4");
  const auto t3 = enumerate_good_involutions(trivial_quandle(3));
  require(t3.size() == 4, "trivial quandle of order 3: expected 4 involutions");
  std::vector<std::vector<int>> t3i;
  for (const auto& p : t3) t3i.push_back(images(p));
  require(t3i == oracle::all_involutions(3), "trivial quandle of order 3 differs from oracle");
}

void criterion5() {
  std::vector<Quandle> corpus;
  for (int n = 1; n <= 6; ++n) corpus.push_back(dihedral_quandle(n));
  for (int n = 1; n <= 6; ++n) corpus.push_back(trivial_quandle(n));
  for (int n = 2; n <= 6; ++n) corpus.push_back(conj_quandle(cyclic_group(n)));
  corpus.push_back(conj_quandle(symmetric_group(3)));
  corpus.push_back(quandle_from_table({{0, 0, 0}, {2, 1, 1}, {1, 2, 2}}));
  for (const auto& q : corpus) {
    std::vector<std::vector<int>> got;
    const auto aut = aut_group(q);
    for (const auto& f : aut.elements()) got.push_back(images(f));
    require(got == oracle::automorphisms(q.table()),
            "aut_group differs from brute force at order " + std::to_string(q.order()));
    for (const auto& rho : enumerate_good_involutions(q)) {
      const auto r = images(rho);
      std::vector<std::vector<int>> sym;
      const auto sym_aut = symmetric_aut_group(attach_involution(q, r));
      for (const auto& f : sym_aut.elements()) sym.push_back(images(f));
      require(sym == oracle::automorphisms(q.table(), &r), "symmetric_aut_group differs from brute force");
    }
  }
}

void criterion6() {
  std::vector<SymmetricQuandle> corpus;
  for (int n = 1; n <= 12; ++n)
    for (const auto& rho : enumerate_good_involutions(dihedral_quandle(n)))
      corpus.push_back(attach_involution(dihedral_quandle(n), images(rho)));
  for (int n = 2; n <= 12; n += 2) corpus.push_back(antipodal(n));
  for (int n = 1; n <= 12; ++n) corpus.push_back(conj_symmetric_quandle(cyclic_group(n)));
  for (int n = 1; n <= 6; ++n) corpus.push_back(conj_symmetric_quandle(dihedral_group(n)));
  corpus.push_back(conj_symmetric_quandle(symmetric_group(3)));
  corpus.push_back(conj_symmetric_quandle(quaternion_group()));
  for (const auto& s : corpus) {
    const auto& q = s.quandle();
    const PermGroup g = s.order() <= 8 ? symmetric_aut_group(s) : inner_group(s);
    for (int a = 0; a < s.order(); ++a) {
      require(q.translation_perm(s.rho()[a]) == q.translation_perm(a).inverse(), "s_rho(a) != s_a^-1");
      for (const auto& f : g.elements())
        require(q.translation_perm(f[a]) == f.inverse().then(q.translation_perm(a)).then(f),
                "s_(a.f) != f^-1 s_a f");
    }
  }
  std::cout << "    (" << corpus.size() << " symmetric quandles)\n";
}

void criterion7() {
  require(!table_presentations.empty() && !perm_presentations.empty(), "criteria 1-3 produced nothing");
  long long cells = 0;
  for (const auto& p : table_presentations) {
    const auto r = check_well_definedness(p, true, true);
    require(r.ok, r.first_mismatch);
    cells += r.op_cells_checked + r.rho_cells_checked;
  }
  for (const auto& p : perm_presentations) {
    const auto r = check_well_definedness(p, true, true);
    require(r.ok, r.first_mismatch);
    cells += r.op_cells_checked + r.rho_cells_checked;
  }
  std::cout << "    (" << table_presentations.size() + perm_presentations.size() << " presentations, "
            << cells << " representative choices)\n";
}

void criterion8() {
  for (int n = 1; n <= 8; ++n) {
    const auto g = cyclic_group(n);
    const auto p = conj_presentation(g);
    const auto built = build_symmetric_quandle(p);
    require(find_symmetric_isomorphism(built.sq, conj_symmetric_quandle(g)).has_value(),
            "Z" + std::to_string(n) + ": not isomorphic to (Conj, Inv)");
    require(oracle::inversion_closed_transversal_exists(g.table()), "oracle disagrees on Z" + std::to_string(n));
  }
  for (const auto& [name, g] : {std::pair<std::string, FiniteGroup>{"S3", symmetric_group(3)},
                                {"Q8", quaternion_group()}}) {
    bool refused = false;
    try {
      conj_presentation(g);
    } catch (const Error& e) {
      refused = e.kind() == ErrorKind::NoInversionClosedTransversal;
    }
    require(refused, name + ": expected NoInversionClosedTransversal");
    require(!oracle::inversion_closed_transversal_exists(g.table()), name + ": oracle finds a transversal");
  }
}

void criterion9() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fixtures)) {
    const auto ext = e.path().extension();
    if (ext == ".qnd" || ext == ".prs" || ext == ".grp") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  require(files.size() >= 10, "fewer than 10 fixtures");
  int builds = 0;
  for (const auto& f : files) {
    const std::string text = io::read_file(f);
    const std::string body = strip_comments(text);
    const auto name = f.filename().string();
    if (f.extension() == ".grp") {
      require(io::format_group(io::parse_group(text)) == body, name + ": parse/format not identity");
    } else if (f.extension() == ".qnd") {
      const auto file = io::parse_quandle_file(text);
      const auto q = quandle_from_table(file.table, file.rack_header);
      std::string again;
      if (file.rho) {
        again = io::format_symmetric_quandle(attach_involution(q, *file.rho));
      } else {
        again = io::format_quandle(q);
      }
      require(again == body, name + ": parse/format not identity");
      const auto c1 = shell(quote(sqk_binary) + " check " + quote(f.string()));
      const auto c2 = shell(quote(sqk_binary) + " check " + quote(f.string()));
      require(c1.status == c2.status && c1.out == c2.out, name + ": check output not reproducible");
    } else {
      const auto p = io::parse_presentation(text, f.parent_path());
      const auto canonical = strip_comments(io::format_presentation(p));
      if (external_group(body)) {
        // the group gets inlined, so only the second pass must be a fixed point
        const auto again = io::parse_presentation(canonical);
        require(strip_comments(io::format_presentation(again)) == canonical, name + ": format not a fixed point");
        require(build_symmetric_quandle(again).sq == build_symmetric_quandle(p).sq,
                name + ": inlined group builds a different quandle");
      } else {
        require(canonical == body, name + ": parse/format not identity");
      }
      const auto b1 = shell(quote(sqk_binary) + " build " + quote(f.string()));
      const auto b2 = shell(quote(sqk_binary) + " build " + quote(f.string()));
      require(b1.status == 0, name + ": build failed");
      require(b1.out == b2.out, name + ": build output not byte-identical across runs");
      // the built file parses back to the same symmetric quandle and prints identically
      const auto s = io::parse_symmetric_quandle(b1.out);
      require(io::format_symmetric_quandle(s) == strip_comments(b1.out), name + ": built file not canonical");
      require(s == build_symmetric_quandle(p).sq, name + ": CLI build differs from library build");
      auto expected = f;
      expected.replace_extension(".built.qnd");
      if (fs::exists(expected))
        require(io::read_file(expected) == b1.out, name + ": build differs from stored " +
                                                       expected.filename().string());
      ++builds;
    }
  }
  require(builds >= 3, "fewer than 3 presentation fixtures");
  std::cout << "    (" << files.size() << " fixture files, " << builds << " builds)\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <sqk binary> <fixtures dir>\n";
    return 2;
  }
  sqk_binary = argv[1];
  fixtures = argv[2];

  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: no limit
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "quaternion example end to end", 1.0, criterion1},
      {2, "decompose/verify every good involution of the corpus", 60.0, criterion2},
      {3, "homogeneous case: Aut gives one orbit, Inn gives two", 0, criterion3},
      {4, "good involution enumeration matches brute force", 0, criterion4},
      {5, "automorphism groups match brute force for n <= 6", 0, criterion5},
      {6, "translation lemma on catalog symmetric quandles", 0, criterion6},
      {7, "well-definedness under every coset representative", 0, criterion7},
      {8, "conjugation presentations", 0, criterion8},
      {9, "CLI determinism and fixture round trip", 0, criterion9},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.run();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (verdict == "PASS" && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      verdict = "FAIL";
      detail = "took longer than " + std::to_string(c.limit_seconds) + " s";
    }
    if (verdict != "PASS") ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << "criterion " << c.id << ": " << verdict << "  " << c.title << "  [" << seconds << " s]";
    if (!detail.empty()) line << "  " << detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
