#pragma once

#include "hdm/grassmannian.hpp"

namespace hdm {

// Edge weights of the Gr(2,6) gadget at a black vertex.
struct H26Weights {
    Q a, b, c, d, e, f, x, y, u;

    static H26Weights ones();
    std::vector<Q> as_vector() const;  // order a b c d e f x y u
    static H26Weights from_vector(const std::vector<Q>& v);
    bool operator==(const H26Weights&) const = default;
};

// Signed 7x3 matrix: rows w1..w6 (boundary) then the interior white, columns B1..B3.
QMatrix h26_kasteleyn(const H26Weights& w);
// Schur reduction onto rows w1..w6 and columns B1, B2, first column rescaled by u (6x2).
QMatrix h26_reduced(const H26Weights& w);
// The 2x6 point (transpose of h26_reduced).
GrassmannPoint h26_point(const H26Weights& w);
// Inverse of h26_point up to column operations; NonGeneric names the first vanishing minor.
H26Weights h26_weights(const GrassmannPoint& p);

// Gadget as a disk network with white boundary w1..w6 counterclockwise, unsigned weights.
PlabicNetwork h26_network(const H26Weights& w);
// Mirror gadget: black boundary, clockwise, all weights 1.
PlabicNetwork h26_star_network();
// Its boundary measurement ((1,1,0,-1,-1,-2),(0,1,1,2,1,1)).
QMatrix h26_star_matrix();

}  // namespace hdm
