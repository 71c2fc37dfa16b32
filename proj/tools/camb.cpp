// Command-line front end: group ingestion, sortable enumeration, pi_downarrow
// evaluation, property verification suites, and rank-3 SVG fan rendering.
//
// Exit codes: 0 pass, 1 violation, 2 usage/parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "camb/fan.hpp"
#include "camb/group_io.hpp"
#include "camb/render.hpp"
#include "camb/sortable.hpp"
#include "camb/verify.hpp"

using namespace camb;
using Json = nlohmann::json;

namespace {

std::string reflection_word(const CoxGroup& g, const Vec& root) { return g.word_str(g.reflection(root)); }

int cmd_sortables(const std::string& group_file, const std::string& cword, int max_len,
                  const std::string& format) {
  const CoxGroup g = load_group(group_file);
  const CoxWord c = parse_cox_word(g, cword);
  const auto sortables = enumerate_sortables(g, c, max_len);
  Json rows = Json::array();
  for (const Elt& v : sortables) {
    Json row;
    row["word"] = g.word_str(v);
    row["length"] = v.length();
    Json cov = Json::array();
    auto covs = g.cover_reflection_roots(v);
    std::sort(covs.begin(), covs.end(), vec_less);
    for (const Vec& r : covs) cov.push_back(reflection_word(g, r));
    row["cov"] = cov;
    Json ufs = Json::array();
    for (const Vec& r : sorting_word(g, c, v).unforced_roots()) ufs.push_back(reflection_word(g, r));
    row["ufs"] = ufs;
    row["nc"] = g.word_str(nc(g, c, v));
    rows.push_back(std::move(row));
  }
  if (format == "json") {
    Json out;
    out["group"] = group_file;
    out["c"] = cword;
    out["max_length"] = max_len;
    out["count"] = rows.size();
    out["sortables"] = rows;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "# " << rows.size() << " c-sortable elements (c = " << cword << ", l <= " << max_len << ")\n";
    for (const auto& row : rows) {
      std::cout << (row["word"].get<std::string>().empty() ? "e" : row["word"].get<std::string>())
                << "  len=" << row["length"] << "  cov={";
      for (size_t i = 0; i < row["cov"].size(); ++i)
        std::cout << (i ? " " : "") << row["cov"][i].get<std::string>();
      std::cout << "}  ufs={";
      for (size_t i = 0; i < row["ufs"].size(); ++i)
        std::cout << (i ? " " : "") << row["ufs"][i].get<std::string>();
      std::cout << "}  nc=" << (row["nc"].get<std::string>().empty() ? "e" : row["nc"].get<std::string>())
                << "\n";
    }
  }
  return 0;
}

int cmd_pidown(const std::string& group_file, const std::string& cword, const std::string& word) {
  const CoxGroup g = load_group(group_file);
  const CoxWord c = parse_cox_word(g, cword);
  const Elt w = g.from_names(word);
  std::cout << g.word_str(pidown(g, c, w)) << "\n";
  return 0;
}

int cmd_verify(const std::string& group_file, const std::string& cword, const std::string& suite,
               int max_len) {
  const CoxGroup g = load_group(group_file);
  const CoxWord c = parse_cox_word(g, cword);
  const auto reports = verify_suites(g, c, suite, max_len);
  Json out = Json::array();
  bool ok = true;
  for (const Report& r : reports) {
    Json jr;
    jr["suite"] = r.suite;
    jr["checks"] = r.checks;
    jr["pass"] = r.pass();
    Json viols = Json::array();
    for (const auto& v : r.violations) {
      Json jv{{"violation_kind", v.kind}, {"detail", v.detail}};
      if (!v.pair.empty()) jv["pair"] = v.pair;
      if (!v.witness.empty()) jv["witness"] = v.witness;
      viols.push_back(std::move(jv));
    }
    jr["violations"] = viols;
    out.push_back(std::move(jr));
    ok = ok && r.pass();
  }
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_render(const std::string& group_file, const std::string& cword, const std::string& projection,
               int max_len, const std::string& out_path, int size_px, bool no_highlight) {
  const CoxGroup g = load_group(group_file);
  const CoxWord c = parse_cox_word(g, cword);
  RenderSpec spec;
  spec.length_cap = max_len;
  spec.size_px = size_px;
  spec.highlight_sortable = !no_highlight;
  if (projection == "affine-slice")
    spec.projection = RenderSpec::Projection::AffineSlice;
  else if (projection == "stereographic")
    spec.projection = RenderSpec::Projection::Stereographic;
  else if (projection == "poincare-disk")
    spec.projection = RenderSpec::Projection::PoincareDisk;
  else
    throw CLI::ValidationError("--projection", "expected affine-slice|stereographic|poincare-disk");
  const std::string svg = render_svg(g, c, spec);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with sortable elements and Cambrian fans in Coxeter groups"};
  app.require_subcommand(1);

  std::string group_file, cword, word, format = "text", suite = "all", projection = "affine-slice";
  std::string out_path = "fan.svg";
  int max_len = 6, size_px = 800;
  bool no_highlight = false;

  auto* sc_sort = app.add_subcommand("sortables", "enumerate c-sortable elements");
  sc_sort->add_option("--group", group_file, "group definition JSON")->required();
  sc_sort->add_option("--c", cword, "Coxeter element word, e.g. p,q,r")->required();
  sc_sort->add_option("--max-len", max_len, "length cap");
  sc_sort->add_option("--format", format, "text|json");

  auto* sc_pd = app.add_subcommand("pidown", "compute pi_downarrow^c of a word");
  sc_pd->add_option("--group", group_file, "group definition JSON")->required();
  sc_pd->add_option("--c", cword, "Coxeter element word")->required();
  sc_pd->add_option("--word", word, "comma-separated word (may be non-reduced; empty = identity)");

  auto* sc_ver = app.add_subcommand("verify", "run property suites");
  sc_ver->add_option("--group", group_file, "group definition JSON")->required();
  sc_ver->add_option("--c", cword, "Coxeter element word")->required();
  sc_ver->add_option("--suite", suite, "forms|sortable|lattice|fan|all");
  sc_ver->add_option("--max-len", max_len, "length cap");

  auto* sc_ren = app.add_subcommand("render", "render a rank-3 Cambrian fan to SVG");
  sc_ren->add_option("--group", group_file, "group definition JSON")->required();
  sc_ren->add_option("--c", cword, "Coxeter element word")->required();
  sc_ren->add_option("--projection", projection, "affine-slice|stereographic|poincare-disk");
  sc_ren->add_option("--max-len", max_len, "chamber length cap");
  sc_ren->add_option("--out", out_path, "output SVG path");
  sc_ren->add_option("--size", size_px, "image size in pixels");
  sc_ren->add_flag("--no-highlight", no_highlight, "do not shade sortable chambers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_sort->parsed()) return cmd_sortables(group_file, cword, max_len, format);
    if (sc_pd->parsed()) return cmd_pidown(group_file, cword, word);
    if (sc_ver->parsed()) return cmd_verify(group_file, cword, suite, max_len);
    if (sc_ren->parsed()) return cmd_render(group_file, cword, projection, max_len, out_path, size_px, no_highlight);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
