#pragma once

#include "hdm/grassmannian.hpp"
#include "hdm/laurent.hpp"
#include "hdm/multiweb.hpp"
#include "hdm/scalarization.hpp"
#include "hdm/trace.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hdm {

// Malformed input. what() names the offending field ("edges[3].white") or the
// line/column of a syntax error.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);

// Every document written here is a JSON object with "schema": 1 and ends in a newline.
PlanarGraph parse_graph(std::string_view text);
std::string dump_graph(const PlanarGraph& g);

// {"<edge id>": [["p/q", ...], ...], ...}
Connection parse_connection(const PlanarGraph& g, std::string_view text);
std::string dump_connection(const PlanarGraph& g, const Connection& c);

// [{"edge": id, "m": k}, ...], bare or under "multiweb".
Multiweb parse_multiweb(const PlanarGraph& g, std::string_view text);
std::string dump_multiweb(const Multiweb& m);
std::vector<Multiweb> parse_multiwebs(const PlanarGraph& g, std::string_view text);
std::string dump_multiwebs(const std::vector<Multiweb>& webs);

// "newton": [[i, j, "p/q"], ...]
LaurentPoly2 parse_poly(std::string_view text);
std::string dump_poly(const LaurentPoly2& p);

// Graph format plus "weights" {edge id: "p/q"} and "boundary_order" [vertex ids].
PlabicNetwork parse_network(std::string_view text);
std::string dump_network(const PlabicNetwork& net);

// "X": k x n matrix; the dump adds "pluckers" [{"I": [1-based], "value": "p/q"}].
GrassmannPoint parse_point(std::string_view text);
std::string dump_point(const GrassmannPoint& p);

// Ĝ as a network document plus "groups" {G edge id: [Ĝ edge ids]} and "gadget" records.
std::string dump_scalarization(const Scalarization& s);

// Bare 2D array of integers or "p/q" strings, e.g. "[[1,0],[0,1]]".
QMatrix parse_matrix(std::string_view text);
std::string dump_matrix(const QMatrix& m);  // compact, one line

}  // namespace hdm
