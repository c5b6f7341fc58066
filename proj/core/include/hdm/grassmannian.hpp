#pragma once

#include "hdm/graph.hpp"
#include "hdm/kasteleyn.hpp"
#include "hdm/matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hdm {

// Boundary vertices are g.boundary in order 1..n (stored 0-based); weights refer to the
// black-to-white direction of each edge.
struct PlabicNetwork {
    PlanarGraph g;
    std::vector<Q> weight;

    int n_boundary() const { return static_cast<int>(g.boundary.size()); }
    int boundary_position(int v) const;  // -1 for interior vertices
};

struct PerfectOrientation {
    std::vector<char> white_to_black;  // per edge
    std::vector<int> sinks;            // boundary positions, ascending
    std::vector<int> sources;
};

using Subset = std::vector<int>;  // sorted 0-based column indices
using Pluckers = std::map<Subset, Q>;

struct GrassmannPoint {
    QMatrix X;
    Pluckers plucker;  // every k-subset, zeros included
    int k() const { return static_cast<int>(X.rows()); }
    int n() const { return static_cast<int>(X.cols()); }
};

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonGeneric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Subset> k_subsets(int n, int k);
Pluckers pluckers_of(const QMatrix& X);
GrassmannPoint make_point(const QMatrix& X);
// lambda with a = lambda * b on every coordinate, if one exists (both nonzero somewhere).
std::optional<Q> proportionality(const Pluckers& a, const Pluckers& b);
// k = 2 three-term relations D_ik D_jl = D_ij D_kl + D_il D_jk for all i<j<k<l.
bool satisfies_plucker_relations_k2(const Pluckers& p);

// Almost perfect matchings as edge lists: interior vertices matched once, boundary
// vertices at most once.
std::vector<std::vector<int>> almost_perfect_matchings(const PlabicNetwork& net);
Q matching_weight(const PlabicNetwork& net, const std::vector<int>& matching);
Subset matching_boundary(const PlabicNetwork& net, const std::vector<int>& matching);
// Sum of matching weights grouped by the set of matched boundary positions.
Pluckers matching_pluckers(const PlabicNetwork& net);

PerfectOrientation orientation_from_matching(const PlabicNetwork& net, const std::vector<int>& matching);
PerfectOrientation find_perfect_orientation(const PlabicNetwork& net);
bool is_perfect_orientation(const PlabicNetwork& net, const PerfectOrientation& po);

// Path-sum boundary measurement; winding signs come from the straight-line drawing
// (vertex positions, or a Tutte embedding when positions are missing).
GrassmannPoint boundary_measurement(const PlabicNetwork& net, const PerfectOrientation& po);

// X = K[R1,C1] - K[R1,C2] K[R2,C2]^-1 K[R2,C1].
QMatrix schur_complement(const QMatrix& K, const std::vector<int>& r1, const std::vector<int>& c1,
                         const std::vector<int>& r2, const std::vector<int>& c2);

// Scalar Kasteleyn matrix of a network with signed weights: rows whites, columns blacks.
QMatrix network_kasteleyn(const PlabicNetwork& net, const KasteleynSigns& s);

// Schur reduction along an almost perfect matching. Boundary vertices of one color;
// the rows/columns of the result follow the boundary order. Throws SingularMatrix when
// the interior block is singular.
GrassmannPoint schur_reduce(const PlabicNetwork& net, const KasteleynSigns& s, const std::vector<int>& matching);
GrassmannPoint schur_reduce(const PlabicNetwork& net);

// Four-boundary square network with face weights a, b, c, d.
PlabicNetwork gr24_network(const Q& a, const Q& b, const Q& c, const Q& d);
// The two named perfect orientations of that network (sinks {1,2} and {1,3}).
std::vector<int> gr24_acyclic_matching(const PlabicNetwork& net);
std::vector<int> gr24_cyclic_matching(const PlabicNetwork& net);

// Grid network for the top cell of Gr(k, n), unit weights. Boundary 1..k on the left
// (sinks of the grid orientation, top to bottom), k+1..n along the bottom.
PlabicNetwork top_cell_graph(int k, int n);

}  // namespace hdm
