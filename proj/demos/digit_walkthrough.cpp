// Walks the tight digit instance end to end: decomposition, the chromatic
// product table, and an explicit 2-colored path.

#include <iostream>

#include "gallai/decompose.hpp"
#include "gallai/extract.hpp"
#include "gallai/generate.hpp"
#include "gallai/paths.hpp"

int main() {
  using namespace gallai;

  const ColoredTournament t = digit_construction(2, 3);
  std::cout << "digit_construction(2, 3): " << t.vertex_count() << " vertices, "
            << (find_rainbow_triangle(t.base()) ? "has" : "no") << " rainbow triangle\n\n";

  const GallaiPartition p = gallai_partition(t.base());
  std::cout << "partition: t=" << p.parts.size() << " q=" << p.q.str() << "\n";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    std::cout << "  part " << i << ":";
    for (int v : p.parts[i]) std::cout << " " << v;
    std::cout << "\n";
  }

  const ProductReport report = verify_product(t.base(), 2);
  std::cout << "\nchromatic numbers of the 2-color subgraphs:\n";
  for (const auto& entry : report.per_subset)
    std::cout << "  chi" << entry.subset.str() << " = " << entry.chi << "\n";
  std::cout << "product " << report.product.str() << " vs bound " << report.bound.str()
            << " -> " << (report.holds ? "holds" : "violated") << "\n";

  const VertexPath path = s_colored_path(t, 2);
  std::cout << "\n" << path.str() << "\n";
  return 0;
}
