// grouploc: exact-arithmetic workbench for finitely presented groups —
// homology localization, root adjunction towers, Magnus/LCS checks, Fox calculus.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grouploc/alexander.hpp"
#include "grouploc/equations.hpp"
#include "grouploc/errors.hpp"
#include "grouploc/homology.hpp"
#include "grouploc/magnus.hpp"
#include "grouploc/parse.hpp"
#include "grouploc/report.hpp"

using namespace grouploc;

namespace {

std::string file_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

struct Ctx {
  bool json = false;
  std::string out;
  int exit_code = 0;
  RunReport report;

  Presentation load_grp(const std::string& path) {
    std::string text = read_file(path);
    report.inputs.emplace_back(path, fnv1a_hex(text));
    return parse_presentation_text(text, file_stem(path));
  }
  std::string load_text(const std::string& path) {
    std::string text = read_file(path);
    report.inputs.emplace_back(path, fnv1a_hex(text));
    return text;
  }
  void note_input(const std::string& name, const std::string& content) {
    report.inputs.emplace_back(name, fnv1a_hex(content));
  }

  void finish(const std::vector<std::string>& human_lines) {
    Json j = run_report_json(report);
    if (!out.empty()) {
      std::ofstream f(out, std::ios::binary);
      if (!f) fail(Err::ParseError, "cannot write file: " + out);
      f << j.dump(2) << "\n";
    }
    if (json) {
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& l : human_lines) std::cout << l << "\n";
    }
  }
};

std::string invariants_str(const RModuleInvariants& inv) {
  std::string s;
  if (inv.free_rank > 0) s = "Z^" + std::to_string(inv.free_rank);
  for (const auto& d : inv.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + to_string(d));
  return s.empty() ? "0" : s;
}

std::string series_str(const MonomialTable& tab, const Series& s,
                       const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t id = 0; id < s.size(); ++id) {
    if (s[id] == 0) continue;
    Rat c = s[id];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    std::string mono = tab.str(id, names);
    if (mono == "1") {
      out += to_string(c);
    } else {
      out += (c == 1 ? "" : to_string(c) + "*") + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grouploc: exact homology-localization workbench for finitely presented groups"};
  app.require_subcommand(1);
  Ctx ctx;

  std::string ring_lit = "Z";
  int cap = 5, class_bound = 5, depth = 1, q = 4, level = 1;
  std::string grp_path, aux_path, aux_path2, word_text, u_text, s_text;
  std::vector<std::string> assign_texts, system_paths;
  bool auto_sqrt = false, kill_invisible = false;
  int enumerate_cap = 0;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", ctx.json, "emit the JSON report on stdout");
    c->add_option("--out", ctx.out, "write the JSON report to a file");
  };

  // h1
  auto* c_h1 = app.add_subcommand("h1", "H_1 of a presentation with coefficients in R");
  c_h1->add_option("file", grp_path, "presentation file")->required();
  c_h1->add_option("--ring", ring_lit, "coefficient ring literal (Z, Q, Z[1/2,...])");
  add_common(c_h1);
  c_h1->callback([&] {
    ctx.report.command = "h1";
    auto ring = parse_ring(ring_lit);
    auto p = ctx.load_grp(grp_path);
    auto inv = h1_with_R(p, ring);
    Json r;
    r["presentation"] = presentation_json(p);
    r["ring"] = ring_json(ring);
    r["free_rank"] = inv.free_rank;
    Json t = Json::array();
    for (const auto& d : inv.torsion) t.push_back(to_string(d));
    r["torsion"] = std::move(t);
    ctx.report.results = std::move(r);
    ctx.finish({"H_1(" + p.name + "; " + ring.name + ") = " + invariants_str(inv)});
  });

  // check-system
  auto* c_cs = app.add_subcommand("check-system", "validate a system, optionally a solution");
  c_cs->add_option("system", aux_path, "system file")->required();
  c_cs->add_option("file", grp_path, "presentation file")->required();
  c_cs->add_option("--ring", ring_lit, "coefficient ring literal");
  c_cs->add_option("--class", class_bound, "Magnus class bound for solution checking");
  c_cs->add_option("--assign", assign_texts, "assignment words for $1, $2, ... in order");
  add_common(c_cs);
  c_cs->callback([&] {
    ctx.report.command = "check-system";
    auto ring = parse_ring(ring_lit);
    auto p = ctx.load_grp(grp_path);
    auto s = resolve_system(parse_system_text(ctx.load_text(aux_path)), p);
    bool valid = validate_system(s, ring);
    Json r;
    r["system"] = s.str();
    r["ring"] = ring.name;
    r["valid"] = valid;
    std::vector<std::string> lines{std::string("system ") + s.str(),
                                   std::string("valid over ") + ring.name + ": " +
                                       (valid ? "true" : "false")};
    if (!valid) ctx.exit_code = 2;
    if (!assign_texts.empty() && valid) {
      std::vector<Word> assignment;
      for (const auto& t : assign_texts) assignment.push_back(parse_word(t, p.gens));
      Verdict v = check_solution(s, assignment, class_bound);
      r["solution"] = verdict_json(v);
      lines.push_back("solution verdict: " + v.str() +
                      (v.note.empty() ? "" : " (" + v.note + ")"));
      if (v.is_refuted()) ctx.exit_code = 2;
    }
    ctx.report.results = std::move(r);
    ctx.finish(lines);
  });

  // adjoin
  auto* c_adj = app.add_subcommand("adjoin", "adjoin solutions of a system (pi_S)");
  c_adj->add_option("system", aux_path, "system file")->required();
  c_adj->add_option("file", grp_path, "presentation file")->required();
  c_adj->add_option("--ring", ring_lit, "coefficient ring literal");
  add_common(c_adj);
  c_adj->callback([&] {
    ctx.report.command = "adjoin";
    auto ring = parse_ring(ring_lit);
    auto p = ctx.load_grp(grp_path);
    auto s = resolve_system(parse_system_text(ctx.load_text(aux_path)), p);
    auto ar = adjoin_solutions(p, s, ring);
    Json r;
    r["extended"] = presentation_json(ar.extended);
    r["hom"] = hom_json(ar.hom);
    r["certificate"] = cert_json(ar.cert);
    ctx.report.results = std::move(r);
    if (ar.cert.h1.verdict != IsoVerdict::ISO) ctx.exit_code = 2;
    ctx.finish({"extended: " + print_presentation(ar.extended),
                "H_1 over " + ring.name + ": " +
                    (ar.cert.h1.verdict == IsoVerdict::ISO ? "ISO" : "NOT_ISO"),
                "H_2: surjective by construction (adjunction)"});
  });

  // invisible verify | quotient
  auto* c_inv = app.add_subcommand("invisible", "invisibility certificate operations");
  c_inv->require_subcommand(1);
  auto* c_iv = c_inv->add_subcommand("verify", "verify an invisibility certificate");
  c_iv->add_option("cert", aux_path, "certificate file")->required();
  c_iv->add_option("file", grp_path, "presentation file")->required();
  c_iv->add_option("--ring", ring_lit, "coefficient ring literal");
  c_iv->add_option("--class", class_bound, "Magnus class bound");
  add_common(c_iv);
  c_iv->callback([&] {
    ctx.report.command = "invisible verify";
    auto ring = parse_ring(ring_lit);
    auto p = ctx.load_grp(grp_path);
    auto cert = resolve_invisible(parse_invisible_text(ctx.load_text(aux_path)), p);
    Verdict v = verify_invisibility_certificate(cert, ring, class_bound);
    Json r;
    r["certificate"] = cert.str();
    r["ring"] = ring.name;
    r["verdict"] = verdict_json(v);
    ctx.report.results = std::move(r);
    if (v.is_refuted()) ctx.exit_code = 2;
    ctx.finish({"certificate " + cert.str(),
                "verdict: " + v.str() + (v.note.empty() ? "" : " (" + v.note + ")")});
  });
  auto* c_iq = c_inv->add_subcommand("quotient", "quotient by a certified invisible subgroup");
  c_iq->add_option("cert", aux_path, "certificate file")->required();
  c_iq->add_option("file", grp_path, "presentation file")->required();
  c_iq->add_option("--ring", ring_lit, "coefficient ring literal");
  c_iq->add_option("--class", class_bound, "Magnus class bound");
  add_common(c_iq);
  c_iq->callback([&] {
    ctx.report.command = "invisible quotient";
    auto ring = parse_ring(ring_lit);
    auto p = ctx.load_grp(grp_path);
    auto cert = resolve_invisible(parse_invisible_text(ctx.load_text(aux_path)), p);
    auto qr = quotient_by_invisible(p, cert, ring, class_bound);
    Json r;
    r["quotient"] = presentation_json(qr.quotient);
    r["hom"] = hom_json(qr.hom);
    r["certificate"] = cert_json(qr.cert);
    r["certificate_verdict"] = verdict_json(qr.certificate_verdict);
    ctx.report.results = std::move(r);
    if (qr.cert.h1.verdict != IsoVerdict::ISO) ctx.exit_code = 2;
    ctx.finish({"quotient: " + print_presentation(qr.quotient),
                "H_1 over " + ring.name + ": " +
                    (qr.cert.h1.verdict == IsoVerdict::ISO ? "ISO" : "NOT_ISO")});
  });

  // tower
  auto* c_tw = app.add_subcommand("tower", "build a finite closure tower prefix");
  c_tw->add_option("file", grp_path, "seed presentation file")->required();
  c_tw->add_option("--ring", ring_lit, "coefficient ring literal");
  c_tw->add_option("--depth", depth, "number of tower levels to build");
  c_tw->add_flag("--auto-sqrt", auto_sqrt, "adjoin x^2 = h for each free H_1 basis word");
  c_tw->add_option("--systems", system_paths, "system file(s) re-applied at every level");
  c_tw->add_option("--enumerate", enumerate_cap, "enumerate this many systems per level");
  c_tw->add_flag("--kill-invisible", kill_invisible,
                 "quotient by certified invisible subgroups at each level");
  c_tw->add_option("--class", class_bound, "Magnus class bound for certificates");
  add_common(c_tw);
  c_tw->callback([&] {
    ctx.report.command = "tower";
    auto ring = parse_ring(ring_lit);
    auto p = ctx.load_grp(grp_path);
    TowerBudget budget;
    budget.depth = depth;
    budget.auto_sqrt = auto_sqrt;
    budget.enumerate_cap = enumerate_cap;
    budget.kill_invisible = kill_invisible;
    budget.class_bound = class_bound == 5 ? 3 : class_bound;
    for (const auto& sp : system_paths)
      budget.explicit_systems.push_back(
          resolve_system(parse_system_text(ctx.load_text(sp)), p));
    auto tower = build_tower(p, ring, budget);
    ctx.report.results = tower_json(tower);
    std::vector<std::string> lines;
    lines.push_back("tower over " + ring.name + " with " +
                    std::to_string(tower.levels.size()) + " level(s)");
    for (std::size_t i = 0; i < tower.levels.size(); ++i)
      lines.push_back("P" + std::to_string(i) + " = " + print_presentation(tower.levels[i]) +
                      "   H_1 = " + invariants_str(h1_with_R(tower.levels[i], make_ring({}))));
    for (const auto& l : tower.log) lines.push_back(l);
    ctx.finish(lines);
  });

  // magnus
  auto* c_mg = app.add_subcommand("magnus", "truncated Magnus expansion of a word");
  c_mg->add_option("word", word_text, "word to expand")->required();
  c_mg->add_option("file", grp_path, "optional presentation file fixing the alphabet");
  c_mg->add_option("--cap", cap, "degree cap");
  add_common(c_mg);
  c_mg->callback([&] {
    ctx.report.command = "magnus";
    Word w;
    std::vector<std::string> gens;
    if (!grp_path.empty()) {
      auto p = ctx.load_grp(grp_path);
      gens = p.gens;
      w = parse_word(word_text, gens);
    } else {
      std::tie(w, gens) = parse_word_infer(word_text);
      if (gens.empty()) gens.push_back("x");  // the identity word still needs an alphabet
    }
    ctx.note_input("word", word_text);
    MonomialTable tab(static_cast<unsigned>(gens.size()), static_cast<unsigned>(cap));
    Series s = magnus_expand(tab, w);
    Json terms = Json::object();
    for (std::size_t id = 0; id < s.size(); ++id)
      if (s[id] != 0) terms[tab.str(id, gens)] = to_string(s[id]);
    Series delta = s;
    delta[0] -= 1;
    std::size_t lead = first_support(delta);
    Json r;
    r["word"] = word_to_string(w, gens);
    r["cap"] = cap;
    r["expansion"] = std::move(terms);
    if (lead == MonomialTable::npos) {
      r["lcs_degree"] = "ABOVE_CAP";
    } else {
      r["lcs_degree"] = tab.degree(lead);
    }
    ctx.report.results = std::move(r);
    ctx.finish({"M(" + word_to_string(w, gens) + ") = " + series_str(tab, s, gens),
                std::string("lcs degree: ") +
                    (lead == MonomialTable::npos ? "ABOVE_CAP"
                                                 : std::to_string(tab.degree(lead)))});
  });

  // lcs
  auto* c_lcs = app.add_subcommand("lcs", "rational lower central series dimensions");
  c_lcs->add_option("file", grp_path, "presentation file")->required();
  c_lcs->add_option("--q", q, "class bound");
  add_common(c_lcs);
  c_lcs->callback([&] {
    ctx.report.command = "lcs";
    auto p = ctx.load_grp(grp_path);
    auto ranks = rational_lcs_quotient(p, static_cast<unsigned>(q));
    Json r;
    r["presentation"] = presentation_json(p);
    r["q"] = ranks.q;
    r["dimensions"] = ranks.dims;
    ctx.report.results = std::move(r);
    std::string ds;
    for (std::size_t i = 0; i < ranks.dims.size(); ++i)
      ds += (i ? ", " : "") + std::to_string(ranks.dims[i]);
    ctx.finish({"rational LCS dimensions of " + p.name + " up to class " + std::to_string(q) +
                ": [" + ds + "]"});
  });

  // stallings
  auto* c_st = app.add_subcommand("stallings", "graded injectivity of a homomorphism");
  c_st->add_option("hom", aux_path, "hom file")->required();
  c_st->add_option("src", grp_path, "source presentation file")->required();
  c_st->add_option("dst", aux_path2, "target presentation file")->required();
  c_st->add_option("--q", q, "class bound");
  c_st->add_option("--ring", ring_lit, "coefficient ring (accepted; the check is rational)");
  add_common(c_st);
  c_st->callback([&] {
    ctx.report.command = "stallings";
    auto src = ctx.load_grp(grp_path);
    auto dst = ctx.load_grp(aux_path2);
    auto h = resolve_hom(parse_hom_text(ctx.load_text(aux_path)), src, dst);
    auto ring = parse_ring(ring_lit);
    auto rep = stallings_injectivity_check(h, static_cast<unsigned>(q), ring);
    ctx.report.results = stallings_json(rep);
    if (!rep.injective) ctx.exit_code = 2;
    ctx.finish({std::string("graded maps injective through class ") + std::to_string(q) +
                ": " + (rep.injective ? "true" : "false") +
                (rep.detail.empty() ? "" : " (" + rep.detail + ")")});
  });

  // alexander
  auto* c_al = app.add_subcommand("alexander", "Alexander matrix and K-homology rank");
  c_al->add_option("file", grp_path, "presentation file")->required();
  add_common(c_al);
  c_al->callback([&] {
    ctx.report.command = "alexander";
    auto p = ctx.load_grp(grp_path);
    auto d = alexander_matrix(p);
    auto k = kh1_rank(p);
    Json r;
    r["presentation"] = presentation_json(p);
    r["mu"] = d.mu;
    r["variables"] = d.variables;
    Json m = Json::array();
    for (const auto& row : d.matrix) {
      Json jr = Json::array();
      for (const auto& e : row) jr.push_back(laurent_to_string(e, d.variables));
      m.push_back(std::move(jr));
    }
    r["matrix"] = std::move(m);
    r["kh1_rank"] = k.rank;
    r["matrix_rank"] = k.matrix_rank;
    r["degenerate"] = k.degenerate;
    ctx.report.results = std::move(r);
    std::vector<std::string> lines{"mu = " + std::to_string(d.mu),
                                   "kh1 rank = " + std::to_string(k.rank) +
                                       (k.degenerate ? " (mu = 0 convention)" : "")};
    for (std::size_t i = 0; i < d.matrix.size(); ++i) {
      std::string row = "row " + std::to_string(i) + ":";
      for (const auto& e : d.matrix[i]) row += "  " + laurent_to_string(e, d.variables);
      lines.push_back(row);
    }
    ctx.finish(lines);
  });

  // ghn
  auto* c_gh = app.add_subcommand("ghn", "torsion-free derived series membership");
  c_gh->add_option("file", grp_path, "presentation file")->required();
  c_gh->add_option("--word", word_text, "word to test")->required();
  c_gh->add_option("--level", level, "series level (1 or 2)");
  add_common(c_gh);
  c_gh->callback([&] {
    ctx.report.command = "ghn";
    auto p = ctx.load_grp(grp_path);
    Word w = parse_word(word_text, p.gens);
    ctx.note_input("word", word_text);
    auto v = gh_membership(p, w, level);
    Json r;
    r["word"] = word_to_string(w, p.gens);
    r["level"] = v.level;
    r["member"] = v.member;
    r["witness"] = v.witness;
    ctx.report.results = std::move(r);
    if (!v.member) ctx.exit_code = 2;
    std::vector<std::string> lines{word_to_string(w, p.gens) + " in level-" +
                                   std::to_string(level) + " term: " +
                                   (v.member ? "member" : "not a member")};
    for (const auto& s : v.witness) lines.push_back("  " + s);
    ctx.finish(lines);
  });

  // divide
  auto* c_dv = app.add_subcommand("divide", "rank-two divisibility test");
  c_dv->add_option("file", grp_path, "free rank-2 presentation file")->required();
  c_dv->add_option("--u", u_text, "word in the commutator subgroup")->required();
  c_dv->add_option("--s", s_text, "Laurent divisor")->required();
  add_common(c_dv);
  c_dv->callback([&] {
    ctx.report.command = "divide";
    auto p = ctx.load_grp(grp_path);
    Word u = parse_word(u_text, p.gens);
    LaurentPoly s = parse_laurent(s_text, p.gens);
    ctx.note_input("u", u_text);
    ctx.note_input("s", s_text);
    auto res = divisibility_test(p, u, s);
    Json r;
    r["u"] = word_to_string(u, p.gens);
    r["s"] = laurent_to_string(s, p.gens);
    r["mu"] = laurent_to_string(res.mu, p.gens);
    r["solvable"] = res.solvable;
    if (res.solvable) r["quotient_class"] = laurent_to_string(res.quotient, p.gens) + "*[x,y]";
    ctx.report.results = std::move(r);
    if (!res.solvable) ctx.exit_code = 2;
    std::vector<std::string> lines;
    lines.push_back(std::string(res.solvable ? "SOLVABLE" : "UNSOLVABLE") +
                    "  (derived class = (" + laurent_to_string(res.mu, p.gens) +
                    ") * [" + p.gens[0] + "," + p.gens[1] + "])");
    if (res.solvable)
      lines.push_back("quotient class: (" + laurent_to_string(res.quotient, p.gens) + ") * [" +
                      p.gens[0] + "," + p.gens[1] + "]");
    ctx.finish(lines);
  });

  // container
  auto* c_ct = app.add_subcommand("container", "level <= 2 container report");
  c_ct->add_option("file", grp_path, "presentation file")->required();
  c_ct->add_option("--level", level, "container level (0, 1 or 2)");
  add_common(c_ct);
  c_ct->callback([&] {
    ctx.report.command = "container";
    auto p = ctx.load_grp(grp_path);
    auto rep = container_level(p, level);
    Json r;
    r["level"] = rep.level;
    r["mu"] = rep.mu;
    r["kh1_rank"] = rep.kh1;
    r["description"] = rep.description;
    ctx.report.results = std::move(r);
    ctx.finish({"level " + std::to_string(rep.level) + ": " + rep.description});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error [" << err_name(e.code) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return ctx.exit_code;
}
