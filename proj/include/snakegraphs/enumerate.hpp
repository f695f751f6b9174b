#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "snakegraphs/qpoly.hpp"
#include "snakegraphs/snake_graph.hpp"

namespace snakes {

/// Edge multiset: an m-dimer cover or the edge multiset of an m-multipath.
using EdgeMultiset = std::map<Edge, int>;

/// Reverse-plane-partition labels, one per tile in tile order.
using RppLabeling = std::vector<int>;

/// All m-dimer covers of the graph given by its edge list: every vertex must
/// be incident to exactly m edges counted with multiplicity. Deterministic
/// order (lexicographic in the sorted edge order).
std::vector<EdgeMultiset> enumerate_m_dimers(const std::vector<Edge>& edges, int m);

inline std::vector<EdgeMultiset> enumerate_m_dimers(const SnakeGraph& g, int m) {
    return enumerate_m_dimers(g.edges(), m);
}

/// All single lattice paths (NE-monotone, SW corner of the first tile to NE
/// corner of the last tile) as edge lists.
std::vector<std::vector<Edge>> enumerate_lattice_paths(const SnakeGraph& snake);

/// All m-lattice paths: equivalence classes of m-multipaths, one edge
/// multiset per class.
std::vector<EdgeMultiset> enumerate_m_lattice_paths(const SnakeGraph& snake, int m);

/// Tile labels "number of paths above the tile" of a valid m-lattice path.
/// Returns nullopt if the multiset does not decompose into m monotone paths.
std::optional<RppLabeling> path_to_rpp(const SnakeGraph& snake, const EdgeMultiset& path, int m);

/// Edge multiset of the m-lattice path with the given RPP labels.
EdgeMultiset rpp_to_path(const SnakeGraph& snake, const RppLabeling& labels, int m);

/// Claussen/Propp bijection: push an m-dimer cover of `snake` through the
/// tile-by-tile anti-diagonal reflections; the result lives on the dual
/// snake graph, which is also returned.
std::pair<SnakeGraph, EdgeMultiset> dimer_to_lattice_path(const SnakeGraph& snake,
                                                          const EdgeMultiset& cover);

mpz_class count_m_dimers(const std::vector<Edge>& edges, int m);

inline mpz_class count_m_dimers(const SnakeGraph& g, int m) {
    return count_m_dimers(g.edges(), m);
}

/// Rank generating function of the m-dimer covers of `snake`: sum of
/// q^{size of the dual RPP} over m-lattice paths on the dual snake graph.
QPolynomial rank_generating_function(const SnakeGraph& snake, int m);

}  // namespace snakes
