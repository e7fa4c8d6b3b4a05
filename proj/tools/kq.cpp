// kq: knot quandle invariants from the command line. JSON on stdout.

#include "kq/alexander.hpp"
#include "kq/beck.hpp"
#include "kq/catalog.hpp"
#include "kq/error.hpp"
#include "kq/json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>

namespace {

using kq::Json;

struct DiagramInput {
  std::string pd;
  std::string braid;
  std::string catalog;
  int strands = 0;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_option_group("diagram", "knot diagram input (exactly one)");
    g->add_option("--pd", pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
    g->add_option("--braid", braid, "braid word whose closure is a knot, e.g. \"s1 s1 s1\" or \"[1,1,1]\"");
    g->add_option("--catalog", catalog, "catalog knot name (see `catalog list`)");
    g->require_option(1);
    cmd->add_option("--strands", strands, "strand count for --braid (default: max index + 1)");
  }

  kq::Diagram load() const {
    if (!catalog.empty()) return kq::catalog_get(catalog);
    if (!braid.empty()) return kq::braid_closure(kq::parse_braid(braid, strands));
    return kq::resolve_crossings(kq::parse_pd(pd));
  }

  Json describe() const {
    if (!catalog.empty()) return Json{{"catalog", catalog}};
    if (!braid.empty()) return Json{{"braid", kq::format_braid(kq::parse_braid(braid, strands))}};
    return Json{{"pd", kq::parse_pd(pd).to_string()}};
  }
};

bool looks_like_file(const std::string& s) {
  return s.find(':') == std::string::npos || std::filesystem::exists(s);
}

kq::FiniteQuandle load_quandle(const std::string& spec) {
  if (looks_like_file(spec)) return kq::quandle_from_json(kq::read_json_file(spec));
  return kq::quandle_from_spec(spec);
}

kq::QuandleModule load_module(const std::string& spec, const kq::FiniteQuandle& base) {
  if (!looks_like_file(spec)) return kq::module_from_spec(spec, base);
  kq::QuandleModule m = kq::module_from_json(kq::read_json_file(spec));
  if (!(m.base == base)) throw kq::ValidationError("module file '" + spec + "' is not over the given quandle");
  return m;
}

Json diagram_summary(const kq::Diagram& d) {
  Json triples = Json::array();
  for (const auto& t : d.resolved) triples.push_back({t.x, t.y, t.z});
  return Json{{"crossings", d.crossing_count()}, {"arcs", d.arc_count}, {"writhe", d.writhe()}, {"triples", triples}};
}

Json polys(const std::vector<kq::RationalPoly>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

int run_alexander(const DiagramInput& in) {
  const kq::Diagram d = in.load();
  const kq::ExtendedModule em = kq::extended_module(d);
  const kq::LaurentPoly delta = kq::alexander_polynomial(d);
  Json out = in.describe();
  out["diagram"] = diagram_summary(d);
  out["matrix"] = kq::to_json(kq::presentation_matrix(d));
  out["alexander_polynomial"] = delta.to_string();
  out["determinant"] = kq::knot_determinant(d).get_si();
  out["invariant_factors"] = polys(em.rational.factors);
  out["torsion"] = polys(em.torsion());
  out["free_rank"] = em.rational.free_rank;
  out["e1"] = em.e1.to_string();
  out["e2"] = em.e2.to_string();
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_color(const DiagramInput& in, const std::string& qspec) {
  const kq::Diagram d = in.load();
  const kq::FiniteQuandle q = load_quandle(qspec);
  const auto cs = kq::colorings(d, q);
  Json out = in.describe();
  out["quandle"] = qspec;
  out["arcs"] = d.arc_count;
  out["count"] = cs.size();
  out["colorings"] = cs;
  std::cout << out.dump(2) << '\n';
  return 0;
}

std::vector<int> parse_coloring(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',' || ch == ' ') {
      if (cur.empty()) continue;
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(cur, &used));
        if (used != cur.size()) throw std::invalid_argument(cur);
      } catch (const std::exception&) {
        throw kq::ParseError("bad coloring '" + s + "'");
      }
      cur.clear();
    } else if (ch != '[' && ch != ']') {
      cur += ch;
    }
  }
  return out;
}

int run_derive(const DiagramInput& in, const std::string& qspec, const std::string& mspec, bool spectrum,
               const std::string& coloring) {
  const kq::Diagram d = in.load();
  const kq::FiniteQuandle q = load_quandle(qspec);
  const kq::QuandleModule m = load_module(mspec, q);
  Json out = in.describe();
  out["quandle"] = qspec;
  out["module"] = mspec;
  if (spectrum) {
    const auto spec = kq::derivation_spectrum(d, q, m);
    std::map<std::string, std::size_t> mult;
    Json groups = Json::array();
    for (const auto& g : spec) {
      groups.push_back(kq::to_json(g.group));
      ++mult[g.group.to_string()];
    }
    Json summary = Json::array();
    std::string last;
    for (const auto& g : spec) {
      const std::string name = g.group.to_string();
      if (name == last) continue;
      summary.push_back({{"group", name}, {"multiplicity", mult[name]}});
      last = name;
    }
    out["colorings"] = spec.size();
    out["spectrum"] = groups;
    out["summary"] = summary;
  } else {
    const kq::Coloring c = coloring.empty() ? kq::Coloring(static_cast<std::size_t>(d.arc_count), 0)
                                            : parse_coloring(coloring);
    const kq::DerivationGroup g = kq::derivations(d, c, m);
    out["coloring"] = c;
    out["group"] = kq::to_json(g.group);
    out["group_name"] = g.group.to_string();
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_burau(const std::string& word, int strands) {
  const kq::BraidWord w = kq::parse_braid(word, strands);
  const kq::LaurentMatrix b = kq::burau(w);
  Json out{{"braid", kq::format_braid(w)},
           {"strands", w.strands},
           {"matrix", kq::to_json(b)},
           {"determinant", kq::determinant(b).to_string()}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_check(const std::string& what, const std::string& file) {
  const Json j = kq::read_json_file(file);
  Json out;
  bool ok = false;
  if (what == "quandle") {
    const kq::AxiomReport r = kq::check_axioms(kq::table_from_json(j));
    out = Json{{"kind", "quandle"}, {"is_rack", r.is_rack}, {"is_quandle", r.is_quandle},
               {"is_kei", r.is_kei},   {"violations", r.violations}};
    ok = r.ok();
  } else {
    const kq::ModuleReport r = kq::check_module(kq::module_from_json(j));
    out = Json{{"kind", "module"},   {"alpha_invertible", r.alpha_invertible},
               {"a1", r.a1},         {"a2", r.a2},
               {"a3", r.a3},         {"a4", r.a4},
               {"violations", r.violations}};
    ok = r.ok();
  }
  out["ok"] = ok;
  std::cout << out.dump(2) << '\n';
  return ok ? 0 : 1;
}

int run_catalog_list() {
  Json knots = Json::array();
  for (const auto& e : kq::load_catalog()) {
    const kq::PDCode pd = kq::parse_pd(e.pd);
    knots.push_back({{"name", e.name},
                     {"crossings", pd.crossings.size()},
                     {"determinant", e.determinant},
                     {"alexander", e.alexander},
                     {"source", e.source}});
  }
  std::cout << Json{{"knots", knots}}.dump(2) << '\n';
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot quandle invariants: Alexander modules, colorings, Beck-module derivations"};
  app.require_subcommand(1);

  DiagramInput alex_in, color_in, derive_in;
  std::string color_q, derive_q, derive_m, derive_c, braid_word, check_file;
  bool spectrum = false;
  int burau_strands = 0;

  auto* alex = app.add_subcommand("alexander", "presentation matrix, Alexander polynomial, extended module");
  alex_in.add_to(alex);

  auto* color = app.add_subcommand("color", "all colorings by a finite quandle");
  color_in.add_to(color);
  color->add_option("--quandle", color_q, "dihedral:n | alexander:n:t | trivial:n | table JSON file")->required();

  auto* derive = app.add_subcommand("derive", "derivation groups into a Beck module");
  derive_in.add_to(derive);
  derive->add_option("--quandle", derive_q, "base quandle spec or file")->required();
  derive->add_option("--module", derive_m, "constant:n:t | trivial:n | module JSON file")->required();
  derive->add_flag("--spectrum", spectrum, "derivation groups over all colorings");
  derive->add_option("--coloring", derive_c, "arc colors, e.g. 0,1,2 (default: constant 0)");

  auto* burau = app.add_subcommand("burau", "unreduced Burau matrix of a braid word");
  burau->add_option("--braid", braid_word, "braid word")->required();
  burau->add_option("--strands", burau_strands, "number of strands")->required();

  auto* check = app.add_subcommand("check", "axiom report for a quandle or module file; exit 1 on violation");
  check->require_subcommand(1);
  auto* check_q = check->add_subcommand("quandle", "rack, quandle and kei axioms");
  check_q->add_option("--file", check_file, "quandle table JSON")->required();
  auto* check_m = check->add_subcommand("module", "Beck module axioms");
  check_m->add_option("--file", check_file, "module JSON")->required();

  auto* catalog = app.add_subcommand("catalog", "bundled knot table");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "names, crossing numbers, determinants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*alex) return run_alexander(alex_in);
    if (*color) return run_color(color_in, color_q);
    if (*derive) return run_derive(derive_in, derive_q, derive_m, spectrum, derive_c);
    if (*burau) return run_burau(braid_word, burau_strands);
    if (*check_q) return run_check("quandle", check_file);
    if (*check_m) return run_check("module", check_file);
    if (*catalog_list) return run_catalog_list();
  } catch (const kq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const kq::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << app.help();
  return 2;
}
