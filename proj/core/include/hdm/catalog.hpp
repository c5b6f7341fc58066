#pragma once

#include "hdm/graph.hpp"
#include "hdm/trace.hpp"

#include <string>
#include <vector>

namespace hdm {

// Six-vertex web graph with two square faces.
// Vertices: b1 b2 b3 w1 w2 w3 = ids 0..5, n = (1,2,2,1,3,1).
// Edges A..G = ids 0..6: A w1b1, B w2b1, C w2b2, D w1b2, E w3b1, F w3b3, G w2b3.
// b2's cilium sits in the left square, b3's in the outer face.
PlanarGraph two_square_web_graph();
inline const std::vector<std::string> two_square_edge_names{"A", "B", "C", "D", "E", "F", "G"};

// Single black-white edge in the disk with n_b = n_w = d.
PlanarGraph single_edge_graph(int n = 1);
// 4-cycle b0 w0 b1 w1 in the disk, n = 1.
PlanarGraph square_graph();
// 2 x (columns+1) grid of vertices with n = 1.
PlanarGraph ladder_graph(int columns);

}  // namespace hdm
