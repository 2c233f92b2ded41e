#include "shellseq/document.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace shellseq {

namespace {

using json = nlohmann::ordered_json;

std::vector<int> int_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DocumentError(where + " must contain only integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

TilingDocument parse_tiling_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");

  if (!j.contains("format_version")) throw DocumentError("missing field format_version");
  const auto& version = j["format_version"];
  const bool v1 = (version.is_string() && version.get<std::string>() == "1") ||
                  (version.is_number_integer() && version.get<int>() == 1);
  if (!v1) throw DocumentError("unsupported format_version " + version.dump());

  TilingDocument doc;
  if (!j.contains("vertices")) throw DocumentError("missing field vertices");
  doc.vertices = int_array(j["vertices"], "vertices");
  std::set<int> declared(doc.vertices.begin(), doc.vertices.end());
  if (declared.size() != doc.vertices.size()) throw DocumentError("vertices repeat");
  for (int v : doc.vertices)
    if (v < 0) throw DocumentError("vertex ids must be non-negative");

  auto check_declared = [&](const std::vector<int>& vs, const std::string& where) {
    for (int v : vs)
      if (!declared.count(v))
        throw DocumentError(where + " uses undeclared vertex " + std::to_string(v));
  };

  if (!j.contains("tiles") || !j["tiles"].is_array())
    throw DocumentError("missing array field tiles");
  for (std::size_t i = 0; i < j["tiles"].size(); ++i) {
    const auto& tj = j["tiles"][i];
    const std::string where = "tiles[" + std::to_string(i) + "]";
    if (!tj.is_object()) throw DocumentError(where + " must be an object");
    TilingDocument::TileRecord rec;
    if (!tj.contains("simplex")) throw DocumentError(where + " is missing simplex");
    rec.simplex = int_array(tj["simplex"], where + ".simplex");
    check_declared(rec.simplex, where + ".simplex");
    if (!tj.contains("removed_opposite"))
      throw DocumentError(where + " is missing removed_opposite");
    rec.removed_opposite = int_array(tj["removed_opposite"], where + ".removed_opposite");
    check_declared(rec.removed_opposite, where + ".removed_opposite");
    if (tj.contains("morse_face") && !tj["morse_face"].is_null()) {
      rec.morse_face = int_array(tj["morse_face"], where + ".morse_face");
      check_declared(*rec.morse_face, where + ".morse_face");
    }
    for (const auto& [key, value] : tj.items())
      if (key != "simplex" && key != "removed_opposite" && key != "morse_face")
        throw DocumentError("unknown field " + key + " in " + where);
    doc.tiles.push_back(std::move(rec));
  }

  if (j.contains("cells") && !j["cells"].is_null()) {
    if (!j["cells"].is_array()) throw DocumentError("cells must be an array");
    doc.cells.emplace();
    for (std::size_t i = 0; i < j["cells"].size(); ++i) {
      auto cell = int_array(j["cells"][i], "cells[" + std::to_string(i) + "]");
      check_declared(cell, "cells[" + std::to_string(i) + "]");
      doc.cells->push_back(std::move(cell));
    }
  }

  for (const auto& [key, value] : j.items())
    if (key != "format_version" && key != "vertices" && key != "tiles" && key != "cells")
      throw DocumentError("unknown field " + key);

  return doc;
}

MorseTiling realize(const TilingDocument& doc) {
  MorseTiling t;
  for (std::size_t i = 0; i < doc.tiles.size(); ++i) {
    const auto& rec = doc.tiles[i];
    try {
      std::optional<Simplex> face;
      if (rec.morse_face) face = Simplex(*rec.morse_face);
      t.tiles.emplace_back(Simplex(rec.simplex), rec.removed_opposite, std::move(face));
    } catch (const std::invalid_argument& e) {
      throw TilingError("tile " + std::to_string(i) + ": " + e.what());
    }
  }

  std::vector<Simplex> tops;
  for (const auto& tile : t.tiles) tops.push_back(tile.underlying());
  t.space.ambient = SimplicialComplex::downward_closure(tops);

  if (doc.cells) {
    for (const auto& raw : *doc.cells) {
      try {
        Simplex cell{raw};
        if (!t.space.ambient.contains(cell))
          throw TilingError("cell " + cell.to_string() +
                            " is not a face of the tiled complex");
        t.space.cells.insert(std::move(cell));
      } catch (const std::invalid_argument& e) {
        throw TilingError(std::string("bad cell: ") + e.what());
      }
    }
  } else {
    t.space.cells = t.space.ambient.faces();
  }
  return t;
}

TilingDocument document_from(const MorseTiling& t) {
  TilingDocument doc;
  std::set<int> verts;
  for (const auto& s : t.space.ambient.faces())
    verts.insert(s.vertices().begin(), s.vertices().end());
  for (const auto& tile : t.tiles)
    verts.insert(tile.underlying().vertices().begin(), tile.underlying().vertices().end());
  doc.vertices.assign(verts.begin(), verts.end());

  for (const auto& tile : t.tiles) {
    TilingDocument::TileRecord rec;
    rec.simplex = tile.underlying().vertices();
    rec.removed_opposite = tile.removed_opposite();
    if (tile.morse_face()) rec.morse_face = tile.morse_face()->vertices();
    doc.tiles.push_back(std::move(rec));
  }

  if (t.space.cells != t.space.ambient.faces()) {
    doc.cells.emplace();
    for (const auto& c : t.space.cells) doc.cells->push_back(c.vertices());
  }
  return doc;
}

std::string write_tiling_document(const MorseTiling& t) {
  const auto doc = document_from(t);
  json j;
  j["format_version"] = "1";
  j["vertices"] = doc.vertices;
  j["tiles"] = json::array();
  for (const auto& rec : doc.tiles) {
    json tj;
    tj["simplex"] = rec.simplex;
    tj["removed_opposite"] = rec.removed_opposite;
    tj["morse_face"] = rec.morse_face ? json(*rec.morse_face) : json(nullptr);
    j["tiles"].push_back(std::move(tj));
  }
  if (doc.cells) j["cells"] = *doc.cells;
  return j.dump(2) + "\n";
}

}  // namespace shellseq
