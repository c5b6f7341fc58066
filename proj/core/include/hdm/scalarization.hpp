#pragma once

#include "hdm/h26.hpp"
#include "hdm/honeycomb.hpp"
#include "hdm/multiweb.hpp"
#include "hdm/trace.hpp"

#include <array>
#include <map>

namespace hdm {

// Gadget block (0..2, legs 2j and 2j+1) used by each edge at its black and white end.
struct GadgetBlocks {
    std::vector<int> black, white;
};
// Blocks in cilium order at each vertex.
GadgetBlocks default_blocks(const PlanarGraph& g);

struct GadgetRecord {
    bool black = true;
    H26Weights weights;     // all ones at white vertices
    QMatrix M;              // 6x2 reduced matrix (black) or 2x6 constant (white)
    std::vector<int> legs;  // Ĝ vertex per leg, -1 when capped
};

struct Scalarization {
    PlanarGraph G;
    Connection source;
    GadgetBlocks blocks;
    PlanarGraph Ghat;  // n = 1 everywhere
    std::vector<Q> weight;                // per Ĝ edge, unsigned
    std::vector<int> owner;               // Ĝ vertex -> G vertex of its gadget
    std::vector<std::array<int, 2>> groups;  // G edge -> its two parallel Ĝ edges
    std::vector<GadgetRecord> gadgets;    // per G vertex
    std::vector<QMatrix> M_bw;            // per G edge: white gadget block (2x2)
    std::vector<QMatrix> phi_prime;       // per G edge: black gadget block (2x2)
    Connection induced;                   // phi_bw = M_bw * phi_prime
};

// Weights at each black vertex are recovered from the connection; missing blocks at
// vertices of degree < 3 are filled with a fixed generic choice and capped.
// Throws NonGeneric when a gadget minor vanishes.
Scalarization scalarize(const PlanarGraph& g, const Connection& c, const GadgetBlocks& blocks);
Scalarization scalarize(const PlanarGraph& g, const Connection& c);
// Gadget weights given directly (indexed by G vertex; white entries ignored).
Scalarization scalarize_weights(const PlanarGraph& g, const std::vector<H26Weights>& w, const GadgetBlocks& blocks);

// m_e = number of unoccupied edges among the two parallel copies.
Multiweb project_dimer(const Scalarization& s, const Multiweb& cover);

// Sum of cover weights of Ω₁(Ĝ) grouped by image. Covers are enumerated as a choice of
// parallel-edge occupancy times independent matchings inside each gadget.
std::map<Multiweb, Q> fiber_sums(const Scalarization& s, const EnumOptions& eo = {});

struct MeasureCheck {
    Q fiber_sum;
    Q trace;
    bool equal = false;
};
MeasureCheck verify_measure_preservation(const Scalarization& s, const Multiweb& m, const EnumOptions& eo = {});
// Every multiweb of G against one enumeration of Ω₁(Ĝ).
std::vector<std::pair<Multiweb, MeasureCheck>> verify_measure_all(const Scalarization& s, const EnumOptions& eo = {});

// Edge matrices of a scalarized honeycomb torus in the gauge where the white gadget's
// first block and the I edge are identities.
HoneycombSpec induced_honeycomb(const Scalarization& s, const HoneycombPatch& torus);

}  // namespace hdm
