#include "shellseq/quiver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shellseq {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Smallest dimension of an open face of `tile` spanned by a subset of
// `verts` (sorted), if any: the span of the removed-opposite vertices plus,
// when a Morse face is present, one vertex outside it.
std::optional<int> min_open_face_dim_within(const MorseTile& tile, const std::vector<int>& verts) {
  if (verts.empty()) return std::nullopt;
  const auto& removed = tile.removed_opposite();
  if (!std::includes(verts.begin(), verts.end(), removed.begin(), removed.end()))
    return std::nullopt;
  if (!tile.morse_face()) return removed.empty() ? 0 : static_cast<int>(removed.size()) - 1;
  for (int v : verts)
    if (!tile.morse_face()->has_vertex(v)) return static_cast<int>(removed.size());
  return std::nullopt;  // the common vertices sit inside the Morse face
}

std::vector<std::vector<std::size_t>> adjacency(const Quiver& q) {
  std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(q.vertex_count));
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    adj[static_cast<std::size_t>(q.arrows[a].source)].push_back(a);
  return adj;
}

}  // namespace

Quiver build_quiver(const MorseTiling& t) {
  Quiver q;
  q.vertex_count = t.tile_count();
  q.vertex_orders.reserve(t.tiles.size());
  for (const auto& tile : t.tiles) q.vertex_orders.push_back(tile.order());

  for (int i = 0; i < t.tile_count(); ++i) {
    const auto& a = t.tiles[static_cast<std::size_t>(i)];
    for (int j = 0; j < t.tile_count(); ++j) {
      if (i == j) continue;
      const auto& b = t.tiles[static_cast<std::size_t>(j)];
      const auto common = intersect_sorted(a.underlying().vertices(), b.underlying().vertices());
      if (min_open_face_dim_within(b, common))
        q.arrows.push_back({i, j, static_cast<int>(common.size()) - 1});
    }
  }
  return q;
}

Quiver label_filtered(const Quiver& q, int max_label) {
  Quiver out;
  out.vertex_count = q.vertex_count;
  out.vertex_orders = q.vertex_orders;
  for (const auto& a : q.arrows)
    if (a.label <= max_label) out.arrows.push_back(a);
  return out;
}

std::optional<CycleCertificate> find_cycle(const Quiver& q) {
  const auto adj = adjacency(q);
  // 0 = unseen, 1 = on the current path, 2 = done
  std::vector<int> color(static_cast<std::size_t>(q.vertex_count), 0);

  struct Frame {
    int vertex;
    std::size_t next = 0;
  };

  for (int start = 0; start < q.vertex_count; ++start) {
    if (color[static_cast<std::size_t>(start)] != 0) continue;
    std::vector<Frame> stack{{start}};
    std::vector<std::size_t> path_arrows;
    color[static_cast<std::size_t>(start)] = 1;

    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& out = adj[static_cast<std::size_t>(top.vertex)];
      if (top.next == out.size()) {
        color[static_cast<std::size_t>(top.vertex)] = 2;
        stack.pop_back();
        if (!path_arrows.empty()) path_arrows.pop_back();
        continue;
      }
      const std::size_t arrow_idx = out[top.next++];
      const Arrow& arrow = q.arrows[arrow_idx];
      const auto tgt = static_cast<std::size_t>(arrow.target);
      if (color[tgt] == 1) {
        // walk the recorded path backwards until the cycle entry point
        CycleCertificate cycle{arrow};
        if (arrow.target != arrow.source) {
          for (auto it = path_arrows.rbegin(); it != path_arrows.rend(); ++it) {
            cycle.push_back(q.arrows[*it]);
            if (q.arrows[*it].source == arrow.target) break;
          }
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[tgt] == 0) {
        color[tgt] = 1;
        path_arrows.push_back(arrow_idx);
        stack.push_back({arrow.target});
      }
    }
  }
  return std::nullopt;
}

bool is_valid_grading(const Quiver& q, const Grading& g) {
  if (static_cast<int>(g.size()) != q.vertex_count) return false;
  std::set<int> seen(g.begin(), g.end());
  if (static_cast<int>(seen.size()) != q.vertex_count) return false;
  for (const auto& a : q.arrows)
    if (g[static_cast<std::size_t>(a.source)] <= g[static_cast<std::size_t>(a.target)])
      return false;
  return true;
}

std::variant<Grading, CycleCertificate> compute_grading(const Quiver& q) {
  const auto n = static_cast<std::size_t>(q.vertex_count);
  std::vector<int> out_degree(n, 0);
  std::vector<std::vector<int>> sources_of(n);  // arrows into each vertex
  for (const auto& a : q.arrows) {
    ++out_degree[static_cast<std::size_t>(a.source)];
    sources_of[static_cast<std::size_t>(a.target)].push_back(a.source);
  }

  std::set<int> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (out_degree[v] == 0) ready.insert(static_cast<int>(v));

  Grading grading(n, -1);
  int next = 0;
  while (!ready.empty()) {
    const int v = *ready.begin();
    ready.erase(ready.begin());
    grading[static_cast<std::size_t>(v)] = next++;
    for (int src : sources_of[static_cast<std::size_t>(v)])
      if (--out_degree[static_cast<std::size_t>(src)] == 0) ready.insert(src);
  }
  if (next < q.vertex_count) {
    auto cycle = find_cycle(q);
    if (!cycle) throw std::logic_error("grading failed on an acyclic quiver");
    return *cycle;
  }
  return grading;
}

std::variant<ShellingOrder, CycleCertificate> shelling_order(const MorseTiling& t) {
  const auto q = build_quiver(t);
  auto graded = compute_grading(q);
  if (std::holds_alternative<CycleCertificate>(graded))
    return std::get<CycleCertificate>(graded);

  const auto& grading = std::get<Grading>(graded);
  ShellingOrder order(grading.size());
  for (std::size_t v = 0; v < grading.size(); ++v)
    order[static_cast<std::size_t>(grading[v])] = static_cast<int>(v);

  const auto verdict = check_shelling(t, order);
  if (!verdict.ok) throw std::logic_error("a topological order of the quiver failed the shelling check");
  return order;
}

void for_each_topological_order(const Quiver& q,
                                const std::function<bool(const ShellingOrder&)>& visit) {
  const auto n = static_cast<std::size_t>(q.vertex_count);
  std::vector<int> out_degree(n, 0);
  std::vector<std::vector<int>> sources_of(n);
  for (const auto& a : q.arrows) {
    ++out_degree[static_cast<std::size_t>(a.source)];
    sources_of[static_cast<std::size_t>(a.target)].push_back(a.source);
  }

  ShellingOrder order;
  order.reserve(n);
  std::vector<bool> placed(n, false);
  bool keep_going = true;

  auto recurse = [&](auto&& self) -> void {
    if (!keep_going) return;
    if (order.size() == n) {
      keep_going = visit(order);
      return;
    }
    for (std::size_t v = 0; v < n && keep_going; ++v) {
      if (placed[v] || out_degree[v] != 0) continue;
      placed[v] = true;
      order.push_back(static_cast<int>(v));
      for (int src : sources_of[v]) --out_degree[static_cast<std::size_t>(src)];
      self(self);
      for (int src : sources_of[v]) ++out_degree[static_cast<std::size_t>(src)];
      order.pop_back();
      placed[v] = false;
    }
  };
  recurse(recurse);
}

std::optional<CycleCertificate> partial_shellability_obstruction(const MorseTiling& t, int q) {
  return find_cycle(label_filtered(build_quiver(t), q));
}

RestrictedQuiver restricted_quiver(const MorseTiling& t, int q) {
  RestrictedQuiver out;
  for (int i = 0; i < t.tile_count(); ++i)
    if (t.tiles[static_cast<std::size_t>(i)].order() <= q + 1) out.tile_ids.push_back(i);

  const auto m = static_cast<int>(out.tile_ids.size());
  out.quiver.vertex_count = m;
  for (int id : out.tile_ids)
    out.quiver.vertex_orders.push_back(t.tiles[static_cast<std::size_t>(id)].order());

  for (int i = 0; i < m; ++i) {
    const auto& a = t.tiles[static_cast<std::size_t>(out.tile_ids[static_cast<std::size_t>(i)])];
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto& b = t.tiles[static_cast<std::size_t>(out.tile_ids[static_cast<std::size_t>(j)])];
      const auto common = intersect_sorted(a.underlying().vertices(), b.underlying().vertices());
      const auto dim = min_open_face_dim_within(b, common);
      if (dim && *dim <= q)
        out.quiver.arrows.push_back({i, j, static_cast<int>(common.size()) - 1});
    }
  }
  return out;
}

std::variant<PartialShelling, CycleCertificate> partial_shelling_filtration(const MorseTiling& t,
                                                                            int q) {
  const auto rq = restricted_quiver(t, q);
  auto graded = compute_grading(rq.quiver);
  if (std::holds_alternative<CycleCertificate>(graded)) {
    auto cycle = std::get<CycleCertificate>(graded);
    for (auto& a : cycle) {
      a.source = rq.tile_ids[static_cast<std::size_t>(a.source)];
      a.target = rq.tile_ids[static_cast<std::size_t>(a.target)];
    }
    return cycle;
  }

  const auto& grading = std::get<Grading>(graded);
  std::vector<int> by_grade(grading.size());
  for (std::size_t v = 0; v < grading.size(); ++v)
    by_grade[static_cast<std::size_t>(grading[v])] = static_cast<int>(v);

  std::set<Simplex> skeleton;
  for (const auto& c : t.space.cells)
    if (c.dimension() <= q) skeleton.insert(c);

  PartialShelling result;
  std::set<Simplex> prefix;
  for (int v : by_grade) {
    const int tile_id = rq.tile_ids[static_cast<std::size_t>(v)];
    result.tiles.push_back(tile_id);
    for (const auto& f : t.tiles[static_cast<std::size_t>(tile_id)].open_faces())
      if (f.dimension() <= q) prefix.insert(f);
    if (!is_closed_in(prefix, skeleton))
      throw std::logic_error("restricted-quiver order produced a non-closed prefix");
    result.prefixes.push_back(prefix);
  }

  // every skeleton cell must have been reached by a low-order tile
  if (!result.prefixes.empty() && result.prefixes.back() != skeleton)
    throw std::logic_error("tiles of low order do not cover the skeleton");
  if (result.prefixes.empty() && !skeleton.empty())
    throw std::logic_error("tiles of low order do not cover the skeleton");

  return result;
}

}  // namespace shellseq
