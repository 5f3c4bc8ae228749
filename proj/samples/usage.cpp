// Walk through the library: a closed form against its oracle, a residue
// derivation, the 2xN ladder, and an edge-list graph from disk.
//
//   sample_usage [edge-list-file]

#include <iostream>

#include "trigsum/trigsum.hpp"

int main(int argc, char **argv) {
  using namespace trigsum;

  const SumSpec spec{SumFamily::F1, 5, 3, 0};
  const auto report = verify(spec);
  std::cout << "F1(5, 3) = " << to_string(report.closed) << ", oracle agrees: " << std::boolalpha
            << report.passed << '\n';

  std::cout << "F1(5, 3) by residues = " << to_string(f1_by_residue(5, 3)) << '\n';

  for (std::int64_t N = 2; N <= 5; ++N)
    std::cout << "2x" << N << ": corner-to-corner " << to_string(corner_to_corner_2xN(N)) << ", Kirchhoff "
              << to_string(kirchhoff_2xN(N)) << '\n';

  std::cout << "dim V(g=3, k=2) = " << to_string(dim_untwisted(3, 2))
            << ", twisted = " << to_string(dim_twisted(3, 2)) << '\n';

  if (argc > 1) {
    const UnitGraph g = read_edge_list(argv[1]);
    std::cout << argv[1] << ": R(0, " << g.node_count - 1
              << ") = " << to_string(laplacian_resistance(g, 0, g.node_count - 1))
              << ", Kirchhoff index " << to_string(kirchhoff_exact(g)) << '\n';
  }
  return report.passed ? 0 : 1;
}
