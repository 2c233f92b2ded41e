#include "shellseq/dot.hpp"

#include <algorithm>
#include <sstream>

namespace shellseq {

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int v = 0; v < q.vertex_count; ++v) {
    os << "  t" << v << " [label=\"t" << v;
    if (static_cast<std::size_t>(v) < q.vertex_orders.size())
      os << " (k=" << q.vertex_orders[static_cast<std::size_t>(v)] << ")";
    os << "\"];\n";
  }
  auto arrows = q.arrows;
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  for (const auto& a : arrows)
    os << "  t" << a.source << " -> t" << a.target << " [label=\"" << a.label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace shellseq
