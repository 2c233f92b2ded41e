#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "shellseq/tiling.hpp"

namespace shellseq {

struct Arrow {
  int source = 0;
  int target = 0;
  int label = 0;  // dimension of the closed intersection of the two tiles

  bool operator==(const Arrow&) const = default;
};

// Directed multigraph-free quiver on tile indices: at most one arrow per
// ordered pair, never a self-arrow when built from a tiling. Arrows are kept
// sorted by (source, target).
struct Quiver {
  int vertex_count = 0;
  std::vector<int> vertex_orders;  // order (removed-facet count) of each tile
  std::vector<Arrow> arrows;
};

// Arrow from T to T' whenever the closure of T meets T' (as point sets);
// labelled by the dimension of the intersection of the two closures.
Quiver build_quiver(const MorseTiling& t);

// Subquiver keeping arrows with label <= max_label.
Quiver label_filtered(const Quiver& q, int max_label);

// A directed cycle as the list of arrows traversed.
using CycleCertificate = std::vector<Arrow>;

std::optional<CycleCertificate> find_cycle(const Quiver& q);
inline bool is_acyclic(const Quiver& q) { return !find_cycle(q).has_value(); }

// grade[v] strictly decreases along arrows; gradings are reported injective
// (all grades distinct) so that sorting by grade gives a linear order.
using Grading = std::vector<int>;

bool is_valid_grading(const Quiver& q, const Grading& g);

// Sinks-first layered grading (ties broken by vertex id), or a cycle when
// none exists.
std::variant<Grading, CycleCertificate> compute_grading(const Quiver& q);

// Topological order of the tiling quiver, which is exactly a shelling order;
// verified against check_shelling before returning.
std::variant<ShellingOrder, CycleCertificate> shelling_order(const MorseTiling& t);

// All topological orders of q, emitted lexicographically (by vertex id at
// each step); visit returns false to stop the enumeration.
void for_each_topological_order(const Quiver& q,
                                const std::function<bool(const ShellingOrder&)>& visit);

// Shellability up to dimension q: acyclicity of the label-filtered quiver.
// Returns a cycle with labels <= q if the test fails, nullopt on success.
std::optional<CycleCertificate> partial_shellability_obstruction(const MorseTiling& t, int q);

// Quiver on the tiles of order <= q+1 only, with arrows recording that the
// closure of the source meets the target inside the q-skeleton. Vertex ids
// are positions in tile_ids.
struct RestrictedQuiver {
  Quiver quiver;
  std::vector<int> tile_ids;
};
RestrictedQuiver restricted_quiver(const MorseTiling& t, int q);

// Filtration of the q-skeleton induced by a grading of the restricted
// quiver: the tiles of order <= q+1 in gluing order, together with the
// cumulative cell sets, each closed in the skeleton.
struct PartialShelling {
  std::vector<int> tiles;
  std::vector<std::set<Simplex>> prefixes;
};
std::variant<PartialShelling, CycleCertificate> partial_shelling_filtration(const MorseTiling& t,
                                                                            int q);

}  // namespace shellseq
