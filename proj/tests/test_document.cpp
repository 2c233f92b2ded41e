#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "shellseq/document.hpp"
#include "shellseq/generators.hpp"

using namespace shellseq;

namespace {

bool same_tiling(const MorseTiling& a, const MorseTiling& b) {
  return a.tiles == b.tiles && a.space.cells == b.space.cells &&
         a.space.ambient == b.space.ambient;
}

const char* minimal_doc = R"({
  "format_version": "1",
  "vertices": [0, 1, 2],
  "tiles": [
    {"simplex": [0, 1, 2], "removed_opposite": [0], "morse_face": [0]},
    {"simplex": [0, 1, 2], "removed_opposite": [], "morse_face": null}
  ]
})";

}  // namespace

TEST_CASE("generated tilings survive a write/parse round trip") {
  std::vector<MorseTiling> corpus = {
      simplex_boundary_shelling(0).tiling, simplex_boundary_shelling(2).tiling,
      cyclic_triangle_tiling(), searched_octahedron_shelling().tiling};
  for (const auto& t : corpus) {
    const auto text = write_tiling_document(t);
    const auto back = realize(parse_tiling_document(text));
    CHECK(same_tiling(t, back));
  }
}

TEST_CASE("documents with explicit cell lists round trip too") {
  auto t = simplex_boundary_shelling(2).tiling;
  t.space.cells = t.space.restricted_to_dimension(1).cells;
  const auto text = write_tiling_document(t);
  CHECK(text.find("\"cells\"") != std::string::npos);
  const auto back = realize(parse_tiling_document(text));
  CHECK(same_tiling(t, back));

  // the full cell set is implied, not serialized
  const auto full = write_tiling_document(simplex_boundary_shelling(2).tiling);
  CHECK(full.find("\"cells\"") == std::string::npos);
}

TEST_CASE("writer output is stable and versioned") {
  const auto text = write_tiling_document(cyclic_triangle_tiling());
  CHECK(text.find("\"format_version\": \"1\"") != std::string::npos);
  CHECK(text.back() == '\n');
  CHECK(text == write_tiling_document(cyclic_triangle_tiling()));

  const auto doc = document_from(cyclic_triangle_tiling());
  CHECK(doc.vertices == std::vector<int>{0, 1, 2});
  CHECK(doc.tiles.size() == 3);
  CHECK_FALSE(doc.cells.has_value());
}

TEST_CASE("parsing accepts both spellings of the version") {
  const auto doc = parse_tiling_document(minimal_doc);
  CHECK(doc.tiles.size() == 2);
  CHECK(doc.tiles[0].morse_face == std::vector<int>{0});
  CHECK_FALSE(doc.tiles[1].morse_face.has_value());

  std::string integer_version = minimal_doc;
  const auto pos = integer_version.find("\"1\"");
  integer_version.replace(pos, 3, "1");
  CHECK(parse_tiling_document(integer_version).tiles.size() == 2);
}

TEST_CASE("structural failures raise document errors") {
  CHECK_THROWS_AS(parse_tiling_document("not json at all"), DocumentError);
  CHECK_THROWS_AS(parse_tiling_document("{}"), DocumentError);
  CHECK_THROWS_AS(parse_tiling_document(R"({"format_version": "2", "vertices": [], "tiles": []})"),
                  DocumentError);
  // vertices must be distinct and non-negative
  CHECK_THROWS_AS(parse_tiling_document(
                      R"({"format_version": "1", "vertices": [0, 0], "tiles": []})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_tiling_document(
                      R"({"format_version": "1", "vertices": [-1], "tiles": []})"),
                  DocumentError);
  // tiles may only use declared vertices
  CHECK_THROWS_AS(
      parse_tiling_document(
          R"({"format_version": "1", "vertices": [0], "tiles": [{"simplex": [0, 1], "removed_opposite": []}]})"),
      DocumentError);
  // unknown fields are rejected rather than silently dropped
  CHECK_THROWS_AS(
      parse_tiling_document(
          R"({"format_version": "1", "vertices": [0], "tiles": [], "extra": 1})"),
      DocumentError);
  CHECK_THROWS_AS(
      parse_tiling_document(
          R"({"format_version": "1", "vertices": [0], "tiles": [{"simplex": [0], "removed_opposite": [], "weird": 2}]})"),
      DocumentError);
}

TEST_CASE("semantic failures raise tiling errors with the tile index") {
  // removed_opposite must name vertices of the simplex
  const char* bad_tile = R"({
    "format_version": "1",
    "vertices": [0, 1, 2],
    "tiles": [{"simplex": [0, 1], "removed_opposite": [2]}]
  })";
  try {
    realize(parse_tiling_document(bad_tile));
    FAIL("expected a tiling error");
  } catch (const TilingError& e) {
    CHECK(std::string(e.what()).find("tile 0") != std::string::npos);
  }

  // explicit cells must live in the ambient complex
  const char* bad_cells = R"({
    "format_version": "1",
    "vertices": [0, 1, 2, 3],
    "tiles": [{"simplex": [0, 1, 2], "removed_opposite": []}],
    "cells": [[0, 3]]
  })";
  CHECK_THROWS_AS(realize(parse_tiling_document(bad_cells)), TilingError);
}

TEST_CASE("realized documents default to every face of the ambient complex") {
  const auto doc = parse_tiling_document(minimal_doc);
  const auto t = realize(doc);
  CHECK(t.space.ambient == SimplicialComplex::downward_closure({Simplex{0, 1, 2}}));
  CHECK(t.space.cells == t.space.ambient.faces());
  CHECK(t.tiles.size() == 2);
  CHECK(t.tiles[0].morse_face() == Simplex{0});
}
