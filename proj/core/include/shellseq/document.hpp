#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shellseq/tiling.hpp"

namespace shellseq {

// Structural failure: malformed JSON, wrong types, missing fields, version
// mismatch, undeclared vertices.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The document is well-formed but does not describe a legal tile set or
// cell set.
struct TilingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// On-disk form of a tiling, format_version 1.
struct TilingDocument {
  struct TileRecord {
    std::vector<int> simplex;
    std::vector<int> removed_opposite;
    std::optional<std::vector<int>> morse_face;
  };

  std::vector<int> vertices;
  std::vector<TileRecord> tiles;
  // explicit cell list for the space; when absent the space is every face
  // of the downward closure of the tiles' underlying simplices
  std::optional<std::vector<std::vector<int>>> cells;
};

TilingDocument parse_tiling_document(const std::string& text);
MorseTiling realize(const TilingDocument& doc);

TilingDocument document_from(const MorseTiling& t);
std::string write_tiling_document(const MorseTiling& t);

}  // namespace shellseq
