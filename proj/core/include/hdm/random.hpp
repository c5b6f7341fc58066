#pragma once

#include "hdm/graph.hpp"
#include "hdm/trace.hpp"

#include <cstdint>
#include <random>

namespace hdm {

using Rng = std::mt19937_64;

// p/q with q in 1..max_den and |p/q| <= bound.
Q random_rational(Rng& rng, int bound = 5, int max_den = 4);
Q random_positive_rational(Rng& rng, int bound = 5, int max_den = 4);
Connection random_connection(const PlanarGraph& g, Rng& rng, int bound = 5, int max_den = 4);

struct RandomGraphSpec {
    int min_vertices = 6;
    int max_vertices = 10;
    int max_n = 3;
    double edge_density = 0.9;
};

// Straight-line planar bipartite graph on grid points, with multiplicities chosen so
// that at least one multiweb exists and cilia placed at random at even vertices.
PlanarGraph random_planar_bipartite(Rng& rng, const RandomGraphSpec& spec = {});

}  // namespace hdm
