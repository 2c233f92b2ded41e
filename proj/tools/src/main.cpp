#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "shellseq/document.hpp"
#include "shellseq/dot.hpp"
#include "shellseq/generators.hpp"
#include "shellseq/homology.hpp"
#include "shellseq/quiver.hpp"
#include "shellseq/spectral.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace shellseq;

constexpr int exit_ok = 0;        // success / positive verdict
constexpr int exit_negative = 1;  // negative mathematical verdict
constexpr int exit_invalid = 2;   // document parses but the tiling is invalid
constexpr int exit_parse = 3;     // unreadable or malformed document
constexpr int exit_usage = 4;     // bad command line

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json simplex_json(const Simplex& s) { return json(s.vertices()); }

json arrow_json(const Arrow& a) {
  return json{{"source", a.source}, {"target", a.target}, {"label", a.label}};
}

json cycle_json(const CycleCertificate& c) {
  json out = json::array();
  for (const auto& a : c) out.push_back(arrow_json(a));
  return out;
}

json groups_json(const GradedGroups& groups, const CoefficientRing& ring) {
  json out = json::array();
  for (std::size_t d = 0; d < groups.size(); ++d) {
    json torsion = json::array();
    for (const auto& t : groups[d].torsion) torsion.push_back(t.str());
    out.push_back(json{{"degree", d},
                       {"rank", groups[d].rank},
                       {"torsion", torsion},
                       {"pretty", group_to_string(groups[d], ring)}});
  }
  return out;
}

std::pair<json, bool> validation_json(const MorseTiling& t) {
  const auto partition = validate_partition(t);
  json pj;
  pj["ok"] = partition.ok;
  pj["uncovered"] = json::array();
  for (const auto& c : partition.uncovered) pj["uncovered"].push_back(simplex_json(c));
  pj["overlaps"] = json::array();
  for (const auto& [cell, owners] : partition.overlaps)
    pj["overlaps"].push_back(json{{"cell", simplex_json(cell)}, {"tiles", owners}});
  pj["outside_space"] = json::array();
  for (const auto& [tile, cell] : partition.outside)
    pj["outside_space"].push_back(json{{"tile", tile}, {"cell", simplex_json(cell)}});
  pj["tiles_outside_ambient"] = partition.tiles_outside_ambient;

  json cj;
  bool closed_ok = true;
  if (partition.ok) {
    const auto closedness = validate_closedness(t);
    closed_ok = closedness.ok;
    cj["ok"] = closedness.ok;
    cj["violations"] = json::array();
    for (const auto& v : closedness.violations)
      cj["violations"].push_back(json{{"tile", v.tile},
                                      {"cell", simplex_json(v.cell)},
                                      {"owning_tile", v.cell_tile}});
  } else {
    cj["ok"] = nullptr;  // meaningless without a partition
    cj["violations"] = json::array();
  }

  json out;
  out["tiles"] = t.tile_count();
  out["cells"] = t.space.cells.size();
  out["partition"] = std::move(pj);
  out["closedness"] = std::move(cj);
  const bool ok = partition.ok && closed_ok;
  out["valid"] = ok;
  return {std::move(out), ok};
}

// Loads and fully validates; on failure prints a report and returns an exit
// code in `failure`.
std::optional<MorseTiling> load_valid_tiling(const std::string& path, int& failure) {
  MorseTiling t;
  try {
    t = realize(parse_tiling_document(read_file(path)));
  } catch (const DocumentError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "document"}}.dump(2) << "\n";
    failure = exit_parse;
    return std::nullopt;
  } catch (const TilingError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "tiling"}}.dump(2) << "\n";
    failure = exit_invalid;
    return std::nullopt;
  }
  auto [body, ok] = validation_json(t);
  if (!ok) {
    json report{{"command", "validate"}};
    report.update(body);
    std::cout << report.dump(2) << "\n";
    failure = exit_invalid;
    return std::nullopt;
  }
  return t;
}

CoefficientRing parse_coefficients(const std::string& spec, bool allow_integers) {
  if (spec == "rational") return CoefficientRing::rationals();
  if (spec == "integer") {
    if (allow_integers) return CoefficientRing::integers();
    throw CLI::ValidationError("--coeff", "this command needs a field: rational or mod:p");
  }
  if (spec.rfind("mod:", 0) == 0) {
    try {
      const auto p = std::stoll(spec.substr(4));
      return CoefficientRing::prime_field(p);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--coeff", "mod:p needs a prime p");
    }
  }
  throw CLI::ValidationError("--coeff", "expected integer, rational, or mod:p");
}

int cmd_validate(const std::string& path) {
  MorseTiling t;
  try {
    t = realize(parse_tiling_document(read_file(path)));
  } catch (const DocumentError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "document"}}.dump(2) << "\n";
    return exit_parse;
  } catch (const TilingError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "tiling"}}.dump(2) << "\n";
    return exit_invalid;
  }
  auto [body, ok] = validation_json(t);
  json report{{"command", "validate"}};
  report.update(body);
  std::cout << report.dump(2) << "\n";
  return ok ? exit_ok : exit_invalid;
}

int cmd_quiver(const std::string& path, const std::string& dot_path) {
  int failure = exit_ok;
  auto t = load_valid_tiling(path, failure);
  if (!t) return failure;

  const auto q = build_quiver(*t);
  const auto dot = quiver_to_dot(q);

  if (dot_path == "-") {
    std::cout << dot;
    return exit_ok;
  }

  json report;
  report["command"] = "quiver";
  report["vertices"] = q.vertex_count;
  report["arrows"] = json::array();
  for (const auto& a : q.arrows) report["arrows"].push_back(arrow_json(a));
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
      std::cout << json{{"error", "cannot write " + dot_path}}.dump(2) << "\n";
      return exit_parse;
    }
    out << dot;
    report["dot_path"] = dot_path;
  } else {
    report["dot"] = dot;
  }
  std::cout << report.dump(2) << "\n";
  return exit_ok;
}

int cmd_shell(const std::string& path, std::optional<int> q) {
  int failure = exit_ok;
  auto t = load_valid_tiling(path, failure);
  if (!t) return failure;

  json report;
  report["command"] = "shell";

  if (!q) {
    report["partial"] = false;
    auto verdict = shelling_order(*t);
    if (std::holds_alternative<CycleCertificate>(verdict)) {
      report["shellable"] = false;
      report["certificate"] = cycle_json(std::get<CycleCertificate>(verdict));
      std::cout << report.dump(2) << "\n";
      return exit_negative;
    }
    const auto& order = std::get<ShellingOrder>(verdict);
    report["shellable"] = true;
    report["order"] = order;
    std::cout << report.dump(2) << "\n";
    return exit_ok;
  }

  report["partial"] = true;
  report["q"] = *q;
  if (auto cycle = partial_shellability_obstruction(*t, *q)) {
    report["shellable"] = false;
    report["certificate"] = cycle_json(*cycle);
    std::cout << report.dump(2) << "\n";
    return exit_negative;
  }
  report["shellable"] = true;

  auto filtration = partial_shelling_filtration(*t, *q);
  if (std::holds_alternative<CycleCertificate>(filtration)) {
    // the low-order gluing quiver disagrees with the label-filtered one
    report["shellable"] = false;
    report["certificate"] = cycle_json(std::get<CycleCertificate>(filtration));
    std::cout << report.dump(2) << "\n";
    return exit_negative;
  }
  const auto& partial = std::get<PartialShelling>(filtration);
  report["order"] = partial.tiles;
  json sizes = json::array();
  for (const auto& prefix : partial.prefixes) sizes.push_back(prefix.size());
  report["prefix_cell_counts"] = std::move(sizes);
  std::cout << report.dump(2) << "\n";
  return exit_ok;
}

std::string rational_str(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

template <class Field>
json matrix_json(const Field&, const FieldMatrix<Field>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<typename Field::Element, Rational>)
        row.push_back(rational_str(m(r, c)));
      else
        row.push_back(m(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Field>
json page_json(const Field& f, const SpectralPage<Field>& page) {
  json out;
  out["r"] = page.r;
  out["entries"] = json::array();
  for (const auto& [key, dim] : page.dims)
    out["entries"].push_back(json{{"p", key.first}, {"s", key.second}, {"dim", dim}});
  out["differentials"] = json::array();
  for (const auto& [key, m] : page.differentials) {
    bool nonzero = false;
    for (std::size_t r = 0; r < m.rows() && !nonzero; ++r)
      for (std::size_t c = 0; c < m.cols() && !nonzero; ++c)
        if (!f.is_zero(m(r, c))) nonzero = true;
    if (!nonzero) continue;
    out["differentials"].push_back(
        json{{"p", key.first}, {"s", key.second}, {"matrix", matrix_json(f, m)}});
  }
  return out;
}

bool same_dims(const std::map<std::pair<int, int>, int>& a,
               const std::map<std::pair<int, int>, int>& b) {
  return a == b;
}

json limit_json(const LimitReport& report) {
  json out;
  out["degrees"] = json::array();
  for (const auto& d : report.degrees) {
    out["degrees"].push_back(json{{"degree", d.degree},
                                  {"p_first", d.p_first},
                                  {"einf_dims", d.einf},
                                  {"image_filtration", d.image_dims},
                                  {"oracle_betti", d.oracle},
                                  {"match", d.match}});
  }
  out["match"] = report.match;
  return out;
}

struct DirectionOutcome {
  json report;
  bool match = true;
};

template <class Field>
DirectionOutcome spectral_direction_json(const FilteredComplex& fc, const Field& f,
                                         const std::vector<MorseTile>& tiles,
                                         std::optional<int> truncation,
                                         std::optional<int> pages_requested) {
  DirectionOutcome out;
  auto lim = run_to_limit(fc, f);

  std::size_t shown = lim.pages.size();
  if (pages_requested) {
    while (static_cast<int>(lim.pages.size()) - 1 < *pages_requested)
      lim.pages.push_back(compute_page(fc, f, static_cast<int>(lim.pages.size())));
    shown = static_cast<std::size_t>(*pages_requested) + 1;
  } else {
    // auto mode: stop after the first repeated dimension table
    for (std::size_t i = 1; i < lim.pages.size(); ++i)
      if (same_dims(lim.pages[i].dims, lim.pages[i - 1].dims)) {
        shown = i + 1;
        break;
      }
  }

  out.report["direction"] =
      fc.direction == Direction::homological ? "homology" : "cohomology";
  out.report["levels"] = fc.levels;
  out.report["pages"] = json::array();
  for (std::size_t i = 0; i < shown && i < lim.pages.size(); ++i)
    out.report["pages"].push_back(page_json(f, lim.pages[i]));

  const auto tiles_cmp = compare_first_page_with_tiles(fc, f, tiles, truncation);
  json cmp;
  cmp["ok"] = tiles_cmp.ok;
  cmp["mismatches"] = json::array();
  for (const auto& m : tiles_cmp.mismatches)
    cmp["mismatches"].push_back(
        json{{"p", m.p}, {"s", m.s}, {"page_dim", m.page_dim}, {"tile_dim", m.tile_dim}});
  out.report["first_page_vs_tiles"] = std::move(cmp);

  out.report["limit"] = limit_json(lim.report);
  out.match = lim.report.match && tiles_cmp.ok;
  return out;
}

void render_page_text(std::ostream& os, const json& page) {
  os << "page r=" << page["r"].get<int>() << "\n";
  if (page["entries"].empty()) {
    os << "  (empty)\n";
    return;
  }
  std::set<int> ps, ss;
  std::map<std::pair<int, int>, int> dims;
  for (const auto& e : page["entries"]) {
    ps.insert(e["p"].get<int>());
    ss.insert(e["s"].get<int>());
    dims[{e["p"].get<int>(), e["s"].get<int>()}] = e["dim"].get<int>();
  }
  os << "   s\\p |";
  for (int p : ps) os << " " << std::setw(3) << p;
  os << "\n  -----+" << std::string(ps.size() * 4, '-') << "\n";
  for (auto it = ss.rbegin(); it != ss.rend(); ++it) {
    os << "  " << std::setw(4) << *it << " |";
    for (int p : ps) {
      auto d = dims.find({p, *it});
      if (d == dims.end())
        os << "   .";
      else
        os << " " << std::setw(3) << d->second;
    }
    os << "\n";
  }
  for (const auto& d : page["differentials"])
    os << "  d" << page["r"].get<int>() << " at (" << d["p"].get<int>() << ","
       << d["s"].get<int>() << ") is nonzero\n";
}

void render_direction_text(std::ostream& os, const json& dir) {
  os << "== " << dir["direction"].get<std::string>() << " spectral sequence ("
     << dir["levels"].get<int>() << " levels) ==\n";
  for (const auto& page : dir["pages"]) render_page_text(os, page);
  os << "first page vs critical tiles: "
     << (dir["first_page_vs_tiles"]["ok"].get<bool>() ? "MATCH" : "MISMATCH") << "\n";
  os << "limit vs oracle:\n";
  for (const auto& d : dir["limit"]["degrees"]) {
    os << "  degree " << d["degree"].get<int>() << ": dims";
    for (const auto& x : d["einf_dims"]) os << " " << x.get<int>();
    os << " | oracle " << d["oracle_betti"].get<long long>() << " | "
       << (d["match"].get<bool>() ? "MATCH" : "MISMATCH") << "\n";
  }
}

int cmd_spectral(const std::string& path, const std::string& coeff, std::optional<int> q,
                 const std::string& pages, const std::string& format) {
  int failure = exit_ok;
  auto t = load_valid_tiling(path, failure);
  if (!t) return failure;

  CoefficientRing ring = parse_coefficients(coeff, false);

  std::optional<int> pages_requested;
  if (pages != "auto") {
    try {
      pages_requested = std::stoi(pages);
      if (*pages_requested < 0) throw std::invalid_argument("negative");
    } catch (const std::exception&) {
      throw CLI::ValidationError("--pages", "expected auto or a non-negative integer");
    }
  }

  json report;
  report["command"] = "spectral";
  report["coefficients"] = ring.name();

  // establish the gluing order first
  std::vector<int> order;
  if (!q) {
    auto verdict = shelling_order(*t);
    if (std::holds_alternative<CycleCertificate>(verdict)) {
      report["shellable"] = false;
      report["certificate"] = cycle_json(std::get<CycleCertificate>(verdict));
      std::cout << report.dump(2) << "\n";
      return exit_negative;
    }
    order = std::get<ShellingOrder>(verdict);
  } else {
    auto filtration = partial_shelling_filtration(*t, *q);
    if (std::holds_alternative<CycleCertificate>(filtration)) {
      report["shellable"] = false;
      report["certificate"] = cycle_json(std::get<CycleCertificate>(filtration));
      std::cout << report.dump(2) << "\n";
      return exit_negative;
    }
    order = std::get<PartialShelling>(filtration).tiles;
    report["q"] = *q;
  }
  report["shellable"] = true;
  report["order"] = order;

  const auto sf = filtration_from_shelling(*t, order, q);
  const auto dual = dualize(sf.complex);

  DirectionOutcome hom, coh;
  if (ring.kind() == CoefficientRing::Kind::rationals) {
    RationalField f;
    hom = spectral_direction_json(sf.complex, f, sf.tiles, q, pages_requested);
    coh = spectral_direction_json(dual, f, sf.tiles, q, pages_requested);
  } else {
    PrimeField f(ring.characteristic());
    hom = spectral_direction_json(sf.complex, f, sf.tiles, q, pages_requested);
    coh = spectral_direction_json(dual, f, sf.tiles, q, pages_requested);
  }

  report["homology"] = hom.report;
  report["cohomology"] = coh.report;
  const bool match = hom.match && coh.match;
  report["match"] = match;

  if (format == "text") {
    std::ostringstream os;
    os << std::setfill(' ');
    render_direction_text(os, report["homology"]);
    render_direction_text(os, report["cohomology"]);
    os << "overall: " << (match ? "MATCH" : "MISMATCH") << "\n";
    std::cout << os.str();
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return match ? exit_ok : exit_negative;
}

int cmd_homology(const std::string& path, const std::string& coeff) {
  int failure = exit_ok;
  auto t = load_valid_tiling(path, failure);
  if (!t) return failure;

  const auto ring = parse_coefficients(coeff, true);

  const auto complex = underlying_complex(*t);
  std::vector<Simplex> cell_list(t->space.cells.begin(), t->space.cells.end());
  const auto tiled_closure = SimplicialComplex::downward_closure(cell_list);

  json report;
  report["command"] = "homology";
  report["coefficients"] = ring.name();
  report["complex"] = json{{"faces", complex.face_count()},
                           {"dimension", complex.dimension()},
                           {"homology", groups_json(homology(complex, ring), ring)},
                           {"cohomology", groups_json(cohomology(complex, ring), ring)}};
  report["tiled_closure"] =
      json{{"faces", tiled_closure.face_count()},
           {"dimension", tiled_closure.dimension()},
           {"homology", groups_json(homology(tiled_closure, ring), ring)},
           {"cohomology", groups_json(cohomology(tiled_closure, ring), ring)}};
  std::cout << report.dump(2) << "\n";
  return exit_ok;
}

int cmd_examples(const std::string& name, int n, const std::string& out_path) {
  MorseTiling t;
  if (name == "boundary-delta") {
    t = simplex_boundary_shelling(n).tiling;
  } else if (name == "triangle-cycle") {
    t = cyclic_triangle_tiling();
  } else if (name == "octahedron-search") {
    t = searched_octahedron_shelling().tiling;
  } else {
    std::cerr << "unknown example " << name << "\n";
    return exit_usage;
  }

  const auto text = write_tiling_document(t);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return exit_ok;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return exit_parse;
  }
  out << text;
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse tilings of simplicial complexes: validation, shellability, "
               "and the induced homology/cohomology spectral sequences"};
  app.require_subcommand(1);

  std::string path, dot_path, coeff = "rational", hom_coeff = "integer";
  std::string pages = "auto", format = "json";
  std::string example_name, out_path;
  std::optional<int> order_q;
  int n = 2;

  auto* validate = app.add_subcommand("validate", "check a tiling document");
  validate->add_option("path", path, "tiling document")->required();

  auto* quiver = app.add_subcommand("quiver", "export the tiling quiver");
  quiver->add_option("path", path, "tiling document")->required();
  quiver->add_option("--dot", dot_path, "write DOT here ('-' for raw stdout)");

  auto* shell = app.add_subcommand("shell", "decide shellability");
  shell->add_option("path", path, "tiling document")->required();
  shell->add_option("--order", order_q, "decide shellability up to this dimension")
      ->check(CLI::NonNegativeNumber);

  auto* spectral = app.add_subcommand("spectral", "run the spectral sequences");
  spectral->add_option("path", path, "tiling document")->required();
  spectral->add_option("--coeff", coeff, "rational or mod:p (default rational)");
  spectral->add_option("--order", order_q, "truncate to this skeleton dimension")
      ->check(CLI::NonNegativeNumber);
  spectral->add_option("--pages", pages, "auto or a page bound (default auto)");
  spectral->add_option("--format", format, "json or text (default json)")
      ->check(CLI::IsMember({"json", "text"}));

  auto* homology_cmd = app.add_subcommand("homology", "homology of the tiled complex");
  homology_cmd->add_option("path", path, "tiling document")->required();
  homology_cmd->add_option("--coeff", hom_coeff, "integer, rational, or mod:p");

  auto* examples = app.add_subcommand("examples", "emit a built-in example document");
  examples->add_option("name", example_name, "boundary-delta, triangle-cycle, or octahedron-search")
      ->required()
      ->check(CLI::IsMember({"boundary-delta", "triangle-cycle", "octahedron-search"}));
  examples->add_option("--n", n, "sphere dimension for boundary-delta (default 2)")
      ->check(CLI::NonNegativeNumber);
  examples->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*quiver) return cmd_quiver(path, dot_path);
    if (*shell) return cmd_shell(path, order_q);
    if (*spectral) return cmd_spectral(path, coeff, order_q, pages, format);
    if (*homology_cmd) return cmd_homology(path, hom_coeff);
    if (*examples) return cmd_examples(example_name, n, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  } catch (const DocumentError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "document"}}.dump(2) << "\n";
    return exit_parse;
  } catch (const TilingError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "tiling"}}.dump(2) << "\n";
    return exit_invalid;
  } catch (const std::invalid_argument& e) {
    std::cout << json{{"error", e.what()}, {"kind", "input"}}.dump(2) << "\n";
    return exit_invalid;
  }
  return exit_usage;
}
