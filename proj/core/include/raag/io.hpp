#ifndef RAAG_IO_HPP
#define RAAG_IO_HPP

#include <string>
#include <nlohmann/json_fwd.hpp>

#include "raag/conj.hpp"

namespace raag {

using nlohmann::json;

// Graph JSON: {"vertices": ["a","b"], "edges": [["a","b"]]}; the vertex
// array fixes the index order.
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

/// Undirected DOT rendering.
std::string graph_to_dot(const Graph& g, const std::string& name = "G");
/// Hasse diagram of the closed-set lattice as a DOT digraph.
std::string hasse_to_dot(const ClosureLattice& lat);

json vertex_set_to_json(const Graph& g, VertexSet y);
VertexSet vertex_set_from_json(const Graph& g, const json& j);

// Word literals: whitespace-separated tokens `a`, `a^-1`, `a^3`.
PCWord parse_word(const Context& ctx, const std::string& literal);
std::string format_word(const PCWord& w);

// Matrix JSON: {"closed_set": ["a","c","b"], "rows": [[...]]} with
// closed_set in order position.
StabMatrix matrix_from_json(const Context& ctx, const json& j);
json matrix_to_json(const StabMatrix& a);

// Generator atoms: {"tr": ["a","b"], "e": 2}, {"flip": "b"},
// {"class_move": {"class": ["a","b"], "rows": [[0,1],[1,0]]}}.
GeneratorAtom atom_from_json(const Context& ctx, const json& j);
json atom_to_json(const Context& ctx, const GeneratorAtom& atom);
GeneratorWord word_atoms_from_json(const Context& ctx, const json& j);
json word_atoms_to_json(const Context& ctx, const GeneratorWord& word);

// Composition atoms for the factorization front end: generator atoms plus
// {"conj": {"x": "a", "component": ["c"], "dir": 1}} and
// {"inner": "a b^-1"}.
Automorphism composition_from_json(const Context& ctx, const json& j);

}  // namespace raag

#endif
