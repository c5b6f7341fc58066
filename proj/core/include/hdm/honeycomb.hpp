#pragma once

#include "hdm/graph.hpp"
#include "hdm/laurent.hpp"
#include "hdm/trace.hpp"

namespace hdm {

// Honeycomb with edge classes I (identity), A and B; n = 2 everywhere.
struct HoneycombSpec {
    QMatrix A = QMatrix::identity(2);
    QMatrix B = QMatrix::identity(2);
};

enum class EdgeClass { I = 0, A = 1, B = 2 };

// Finite piece of the honeycomb; cls[e] is the class of edge e. Cilia follow the
// periodic pattern: black reads I, A, B and white reads I, B, A.
struct HoneycombPatch {
    PlanarGraph g;
    std::vector<EdgeClass> cls;
    // Gadget block index of each edge at its black and its white end.
    std::vector<int> block_black, block_white;
};

// One black and one white vertex on the torus; edges I, A, B with homology 0, (1,0), (0,1).
HoneycombPatch honeycomb_torus();
// `hexagons` faces in a row (balanced for every count).
HoneycombPatch honeycomb_patch(int hexagons);

Connection honeycomb_connection(const HoneycombSpec& h, const HoneycombPatch& p);

// 1 + z^2 det A + w^2 det B + z tr A + w tr B + zw tr(A adj B).
LaurentPoly2 honeycomb_charpoly(const HoneycombSpec& h);

}  // namespace hdm
