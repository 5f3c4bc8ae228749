#pragma once

// Resistor networks: Wu's double sum for rectangular grids, the exact 2xN
// closed forms in Q(sqrt 3), and an exact Laplacian solver for small graphs.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trigsum/bigfloat.hpp"
#include "trigsum/error.hpp"
#include "trigsum/exact.hpp"

namespace trigsum {

/// rows x cols grid; node (row, col) has index row * cols + col.
/// `horizontal_resistance` joins (x, y)-(x, y+1), `vertical_resistance`
/// joins (x, y)-(x+1, y).
struct GridNetwork {
  std::int64_t rows = 2;
  std::int64_t cols = 2;
  Rational horizontal_resistance = 1;
  Rational vertical_resistance = 1;
};

struct GridPoint {
  std::int64_t row = 0;
  std::int64_t col = 0;
};

/// Unit resistors on the given edges.
struct UnitGraph {
  std::int64_t node_count = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
};

namespace detail {

struct Conductance {
  std::int64_t u;
  std::int64_t v;
  Rational value;
};

inline void require_grid(const GridNetwork &net) {
  require(net.rows >= 1 && net.cols >= 1 && net.rows * net.cols >= 2, errc::argument_out_of_range,
          "grid needs at least two nodes");
  require(net.horizontal_resistance > 0 && net.vertical_resistance > 0, errc::argument_out_of_range,
          "resistances must be positive");
}

inline void require_point(const GridNetwork &net, const GridPoint &p) {
  if (p.row < 0 || p.row >= net.rows || p.col < 0 || p.col >= net.cols)
    fail(errc::coordinate_out_of_range, "(" + std::to_string(p.row) + ", " + std::to_string(p.col) +
                                            ") outside a " + std::to_string(net.rows) + "x" +
                                            std::to_string(net.cols) + " grid");
}

inline void require_connected(std::int64_t n, const std::vector<Conductance> &edges) {
  require(n >= 1, errc::argument_out_of_range, "graph has no nodes");
  std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(n));
  for (const auto &e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> stack{0};
  seen[0] = 1;
  std::int64_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  if (reached != n)
    fail(errc::disconnected_graph,
         "only " + std::to_string(reached) + " of " + std::to_string(n) + " nodes reachable from node 0");
}

using Matrix = std::vector<std::vector<Rational>>;

/// Laplacian with node `ground` removed (row and column).
inline Matrix grounded_laplacian(std::int64_t n, const std::vector<Conductance> &edges, std::int64_t ground) {
  const auto idx = [ground](std::int64_t x) { return static_cast<std::size_t>(x < ground ? x : x - 1); };
  Matrix L(static_cast<std::size_t>(n - 1), std::vector<Rational>(static_cast<std::size_t>(n - 1)));
  for (const auto &e : edges) {
    if (e.u != ground)
      L[idx(e.u)][idx(e.u)] += e.value;
    if (e.v != ground)
      L[idx(e.v)][idx(e.v)] += e.value;
    if (e.u != ground && e.v != ground) {
      L[idx(e.u)][idx(e.v)] -= e.value;
      L[idx(e.v)][idx(e.u)] -= e.value;
    }
  }
  return L;
}

/// Solves A X = B in place by Gauss-Jordan elimination over the rationals.
/// A is nonsingular for a connected grounded Laplacian.
inline Matrix solve(Matrix A, Matrix B) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && A[pivot][col] == 0)
      ++pivot;
    require(pivot < n, errc::disconnected_graph, "singular grounded Laplacian");
    std::swap(A[pivot], A[col]);
    std::swap(B[pivot], B[col]);
    const Rational inv = 1 / A[col][col];
    for (auto &x : A[col])
      x *= inv;
    for (auto &x : B[col])
      x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0)
        continue;
      const Rational f = A[r][col];
      for (std::size_t c = col; c < n; ++c)
        A[r][c] -= f * A[col][c];
      for (std::size_t c = 0; c < B[r].size(); ++c)
        B[r][c] -= f * B[col][c];
    }
  }
  return B;
}

inline std::vector<Conductance> unit_conductances(const UnitGraph &g) {
  require(g.node_count >= 1, errc::argument_out_of_range, "graph has no nodes");
  std::vector<Conductance> out;
  out.reserve(g.edges.size());
  for (const auto &[u, v] : g.edges) {
    require(u >= 0 && u < g.node_count && v >= 0 && v < g.node_count, errc::argument_out_of_range,
            "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") names a missing node");
    require(u != v, errc::argument_out_of_range, "self-loop at node " + std::to_string(u));
    out.push_back({u, v, Rational(1)});
  }
  return out;
}

inline std::vector<Conductance> grid_conductances(const GridNetwork &net) {
  std::vector<Conductance> out;
  const Rational gh = 1 / net.horizontal_resistance;
  const Rational gv = 1 / net.vertical_resistance;
  for (std::int64_t x = 0; x < net.rows; ++x)
    for (std::int64_t y = 0; y < net.cols; ++y) {
      const std::int64_t id = x * net.cols + y;
      if (y + 1 < net.cols)
        out.push_back({id, id + 1, gh});
      if (x + 1 < net.rows)
        out.push_back({id, id + net.cols, gv});
    }
  return out;
}

/// Effective resistance by grounding b and injecting unit current at a.
inline Rational resistance(std::int64_t n, const std::vector<Conductance> &edges, std::int64_t a, std::int64_t b) {
  require(a >= 0 && a < n && b >= 0 && b < n, errc::argument_out_of_range, "node index out of range");
  if (a == b)
    fail(errc::same_node, "resistance between node " + std::to_string(a) + " and itself");
  require_connected(n, edges);
  Matrix rhs(static_cast<std::size_t>(n - 1), std::vector<Rational>(1));
  const std::size_t ia = static_cast<std::size_t>(a < b ? a : a - 1);
  rhs[ia][0] = 1;
  const Matrix x = solve(grounded_laplacian(n, edges, b), std::move(rhs));
  return x[ia][0];
}

} // namespace detail

inline std::int64_t node_index(const GridNetwork &net, const GridPoint &p) {
  detail::require_point(net, p);
  return p.row * net.cols + p.col;
}

/// Wu's free-boundary double sum with M = rows, N = cols, theta_m = m pi/M,
/// phi_n = n pi/N, r the vertical and s the horizontal resistance:
/// r|x1-x2|/N + s|y1-y2|/M + 2/(MN) sum [..]^2 / ((1-cos theta)/r + (1-cos phi)/s).
inline Float wu_resistance(const GridNetwork &net, const GridPoint &p1, const GridPoint &p2,
                           Precision precision = {}) {
  detail::require_grid(net);
  detail::require_point(net, p1);
  detail::require_point(net, p2);
  PrecisionScope scope(Precision::of(precision.bits));
  const std::int64_t M = net.rows;
  const std::int64_t N = net.cols;
  const Float r = to_float(net.vertical_resistance);
  const Float s = to_float(net.horizontal_resistance);
  const Float pi = float_pi();
  Float acc = 0;
  for (std::int64_t m = 1; m < M; ++m) {
    const Float theta = pi * m / M;
    const Float c1 = cos((p1.row + Float(0.5)) * theta);
    const Float c2 = cos((p2.row + Float(0.5)) * theta);
    const Float dx = (1 - Float(cos(theta))) / r;
    for (std::int64_t n = 1; n < N; ++n) {
      const Float phi = pi * n / N;
      const Float diff = c1 * Float(cos((p1.col + Float(0.5)) * phi)) - c2 * Float(cos((p2.col + Float(0.5)) * phi));
      acc += diff * diff / (dx + (1 - Float(cos(phi))) / s);
    }
  }
  const Float straight = r * std::abs(p1.row - p2.row) / N + s * std::abs(p1.col - p2.col) / M;
  return straight + 2 * acc / (M * N);
}

/// Exact effective resistance between two grid nodes.
inline Rational grid_resistance_exact(const GridNetwork &net, const GridPoint &p1, const GridPoint &p2) {
  detail::require_grid(net);
  return detail::resistance(net.rows * net.cols, detail::grid_conductances(net), node_index(net, p1),
                            node_index(net, p2));
}

inline Rational laplacian_resistance(const UnitGraph &graph, std::int64_t a, std::int64_t b) {
  return detail::resistance(graph.node_count, detail::unit_conductances(graph), a, b);
}

/// All pairwise effective resistances from one grounded inverse:
/// R_ab = G_aa + G_bb - 2 G_ab with row/column of node 0 zero.
inline std::vector<std::vector<Rational>> resistance_matrix(const UnitGraph &graph) {
  const auto edges = detail::unit_conductances(graph);
  const std::int64_t n = graph.node_count;
  detail::require_connected(n, edges);
  std::vector<std::vector<Rational>> R(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  if (n == 1)
    return R;
  detail::Matrix identity(static_cast<std::size_t>(n - 1), std::vector<Rational>(static_cast<std::size_t>(n - 1)));
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i)
    identity[i][i] = 1;
  const detail::Matrix G = detail::solve(detail::grounded_laplacian(n, edges, 0), std::move(identity));
  const auto g = [&](std::int64_t a, std::int64_t b) -> Rational {
    if (a == 0 || b == 0)
      return 0;
    return G[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
  };
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      if (a != b)
        R[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g(a, a) + g(b, b) - 2 * g(a, b);
  return R;
}

/// Kirchhoff index: the sum of effective resistances over unordered node pairs.
inline Rational kirchhoff_exact(const UnitGraph &graph) {
  const auto R = resistance_matrix(graph);
  Rational total = 0;
  for (std::size_t a = 0; a < R.size(); ++a)
    for (std::size_t b = a + 1; b < R.size(); ++b)
      total += R[a][b];
  return total;
}

inline UnitGraph grid_graph(std::int64_t rows, std::int64_t cols) {
  require(rows >= 1 && cols >= 1, errc::argument_out_of_range, "grid dimensions must be positive");
  UnitGraph g;
  g.node_count = rows * cols;
  for (const auto &e : detail::grid_conductances(GridNetwork{rows, cols, 1, 1}))
    g.edges.emplace_back(e.u, e.v);
  return g;
}

inline UnitGraph path_graph(std::int64_t n) { return grid_graph(1, n); }

inline UnitGraph cycle_graph(std::int64_t n) {
  require(n >= 3, errc::argument_out_of_range, "cycle needs at least 3 nodes");
  UnitGraph g = path_graph(n);
  g.edges.emplace_back(n - 1, 0);
  return g;
}

namespace detail {

/// t^N / (1 - t^N) for t = 2 - sqrt 3.
inline QuadraticValue geometric_ratio(std::int64_t N) {
  const QuadraticValue tN = quad_pow(two_minus_root3(), static_cast<std::uint64_t>(N));
  return tN / (QuadraticValue(1) - tN);
}

} // namespace detail

/// Corner-to-corner resistance of the 2xN grid in Q(sqrt 3):
/// (N-1)/2 + sqrt3 t^N/(1-t^N) + (sqrt3 - 1)/2 with t = 2 - sqrt3.
inline QuadraticValue corner_to_corner_2xN_quadratic(std::int64_t N) {
  require(N >= 1, errc::argument_out_of_range, "N must be positive");
  const QuadraticValue root3 = QuadraticValue::root3();
  return QuadraticValue(Rational(N - 1, 2)) + root3 * detail::geometric_ratio(N) +
         (root3 - QuadraticValue(1)) * QuadraticValue(Rational(1, 2));
}

inline Rational corner_to_corner_2xN(std::int64_t N) { return quad_to_rational(corner_to_corner_2xN_quadratic(N)); }

/// sum_{n=1}^{N-1} 1/(1 - (2/3) cos^2(n pi/N))
///   = -3 + 6N t^N/(sqrt3 (1-t^N)) + sqrt3 N.
inline QuadraticValue geometric_cos_ratio_sum(std::int64_t N) {
  require(N >= 1, errc::argument_out_of_range, "N must be positive");
  const QuadraticValue root3 = QuadraticValue::root3();
  return QuadraticValue(-3) + QuadraticValue(6 * N) * detail::geometric_ratio(N) / root3 + root3 * QuadraticValue(N);
}

/// sum_{n=1}^{N/2-1} 1/(1 - (2/3) cos^2(n pi/N)) for even N: half of the
/// full sum without its n = N/2 term.
inline QuadraticValue half_range_cos_ratio_sum(std::int64_t N) {
  require(N >= 2 && N % 2 == 0, errc::parity_violation, "half-range sum needs even N");
  return (geometric_cos_ratio_sum(N) - QuadraticValue(1)) * QuadraticValue(Rational(1, 2));
}

/// sum_{n=1}^{N/2} 1/(1 - (2/3) cos^2((2n-1) pi/(2N))) for even N:
/// 3N (t^(2N) - t^N) / (sqrt3 (1 - t^(2N))) + sqrt3 N / 2.
inline QuadraticValue odd_index_cos_ratio_sum(std::int64_t N) {
  require(N >= 2 && N % 2 == 0, errc::parity_violation, "odd-index sum needs even N");
  const QuadraticValue root3 = QuadraticValue::root3();
  const QuadraticValue tN = quad_pow(two_minus_root3(), static_cast<std::uint64_t>(N));
  const QuadraticValue t2N = tN * tN;
  return QuadraticValue(3 * N) * (t2N - tN) / (root3 * (QuadraticValue(1) - t2N)) +
         root3 * QuadraticValue(Rational(N, 2));
}

enum class CosRatioRange { Full, HalfRange, OddIndex };

/// Direct summation of the three cos-ratio sums above.
inline Float oracle_cos_ratio_sum(std::int64_t N, CosRatioRange range, Precision precision = {}) {
  require(N >= 1, errc::argument_out_of_range, "N must be positive");
  PrecisionScope scope(Precision::of(precision.bits));
  const Float pi = float_pi();
  const auto term = [](const Float &angle) {
    const Float c = cos(angle);
    return 1 / (1 - 2 * c * c / 3);
  };
  Float acc = 0;
  switch (range) {
  case CosRatioRange::Full:
    for (std::int64_t n = 1; n < N; ++n)
      acc += term(pi * n / N);
    break;
  case CosRatioRange::HalfRange:
    for (std::int64_t n = 1; n < N / 2; ++n)
      acc += term(pi * n / N);
    break;
  case CosRatioRange::OddIndex:
    for (std::int64_t n = 1; n <= N / 2; ++n)
      acc += term(pi * (2 * n - 1) / (2 * N));
    break;
  }
  return acc;
}

/// Kirchhoff index of the path on N nodes: (N^3 - N)/6.
inline Rational path_kirchhoff(std::int64_t N) {
  require(N >= 1, errc::argument_out_of_range, "N must be positive");
  return Rational(N * N * N - N, 6);
}

/// Kf(2xN) = N + (N^3-N)/3 + (N/3)(-2 + 6N t^(2N)/(sqrt3 (1-t^(2N))) + sqrt3 N).
inline QuadraticValue kirchhoff_2xN_quadratic(std::int64_t N) {
  require(N >= 1, errc::argument_out_of_range, "N must be positive");
  const QuadraticValue root3 = QuadraticValue::root3();
  const QuadraticValue bracket = QuadraticValue(-2) +
                                 QuadraticValue(6 * N) * detail::geometric_ratio(2 * N) / root3 +
                                 root3 * QuadraticValue(N);
  return QuadraticValue(N) + QuadraticValue(Rational(N * N * N - N, 3)) +
         QuadraticValue(Rational(N, 3)) * bracket;
}

inline Rational kirchhoff_2xN(std::int64_t N) { return quad_to_rational(kirchhoff_2xN_quadratic(N)); }

/// N + (N^3-N)/3 + N sum_{n=1}^{N-1} 1/(3 (1 - (2/3) cos^2(n pi/(2N)))),
/// the Laplacian-spectrum form.
inline Float kirchhoff_2xN_spectral(std::int64_t N, Precision precision = {}) {
  require(N >= 1, errc::argument_out_of_range, "N must be positive");
  PrecisionScope scope(Precision::of(precision.bits));
  const Float pi = float_pi();
  Float acc = 0;
  for (std::int64_t n = 1; n < N; ++n) {
    const Float c = cos(pi * n / (2 * N));
    acc += 1 / (3 * (1 - 2 * c * c / 3));
  }
  return to_float(Rational(N) + Rational(N * N * N - N, 3)) + N * acc;
}

} // namespace trigsum
