#pragma once

#include "hdm/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hdm {

// Edge multiplicities m_e, indexed by edge id.
struct Multiweb {
    std::vector<int> m;
    friend bool operator==(const Multiweb&, const Multiweb&) = default;
    friend auto operator<=>(const Multiweb&, const Multiweb&) = default;
};

struct EnumerationTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 10^7 unless MULTIWEB_CAP is set.
std::uint64_t default_enumeration_cap();

struct EnumOptions {
    std::uint64_t cap = default_enumeration_cap();
    int threads = 1;
};

bool is_multiweb(const PlanarGraph& g, const Multiweb& m);
bool hall_feasible(const PlanarGraph& g);
// All multiwebs, lexicographic in the multiplicity vector.
std::vector<Multiweb> enumerate_multiwebs(const PlanarGraph& g, const EnumOptions& opt = {});

// `cycle` lists edge ids of a closed alternating walk through interior vertices.
// Entries at even positions lose one, odd positions gain one.
Multiweb loop_move(const PlanarGraph& g, const Multiweb& m, const std::vector<int>& cycle);

// Alternating closed walks whose loop moves carry `from` to `to` (closed graphs).
std::vector<std::vector<int>> decompose_difference(const PlanarGraph& g, const Multiweb& from, const Multiweb& to);

}  // namespace hdm
