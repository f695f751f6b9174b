#pragma once

#include <compare>
#include <string>
#include <vector>

#include "snakegraphs/cf.hpp"

namespace snakes {

struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

/// Undirected unit edge on the integer lattice, stored with endpoints sorted.
struct Edge {
    Point a;
    Point b;
    Edge() = default;
    Edge(Point p, Point q);
    bool horizontal() const { return a.y == b.y; }
    bool vertical() const { return a.x == b.x; }
    auto operator<=>(const Edge&) const = default;
};

/// A snake graph: a chain of unit tiles, each new tile glued north or east
/// of the previous one. The degenerate case (zero tiles) is a single edge.
class SnakeGraph {
  public:
    /// Build from a direction word over {'R','U'}: tile k+1 is placed right
    /// of or above tile k. An empty word gives a single tile.
    static SnakeGraph from_directions(const std::string& directions);

    /// The degenerate zero-tile snake: one vertical edge with two vertices.
    static SnakeGraph single_edge();

    /// Horizontal row of `tiles` tiles (the shape of G[1^n] with n = tiles+1
    /// vertical edges); tiles == 0 degenerates to a single vertical edge.
    static SnakeGraph straight_row(int tiles);

    int tile_count() const { return static_cast<int>(tiles_.size()); }
    const std::vector<Point>& tiles() const { return tiles_; }  // SW corners
    const std::string& directions() const { return directions_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<Point> vertices() const;

    bool degenerate() const { return tiles_.empty(); }

    /// South-west corner of the first tile (start vertex for lattice paths).
    Point sw_corner() const;
    /// North-east corner of the last tile (end vertex for lattice paths).
    Point ne_corner() const;

    bool has_edge(const Edge& e) const;

    bool operator==(const SnakeGraph& o) const {
        return tiles_ == o.tiles_ && edges_ == o.edges_;
    }

  private:
    std::vector<Point> tiles_;
    std::string directions_;     // length max(tile_count-1, 0)
    std::vector<Edge> edges_;    // sorted, deduplicated
};

/// Snake graph of a continued fraction, per the sign-sequence rules: the
/// first tile sits at the origin, and a sign change between consecutive
/// interior edges means the snake continues straight.
SnakeGraph build_snake(const ContinuedFraction& cf);

/// Recover the sign sequence (including the induced choice of the final
/// edge) from the shape of a snake graph.
SignSequence sign_sequence_of(const SnakeGraph& snake);

/// Fence poset on the tiles: x < y iff tile x lies below or to the right of
/// tile y, restricted to adjacent tiles. Elements are 0-based tile indices.
struct FencePoset {
    int size = 0;
    std::vector<std::pair<int, int>> relations;  // (lesser, greater) covers

    /// Chain 0 < 1 < ... < n-1.
    static FencePoset chain(int n);
    /// Zigzag b_1 < b_2 > b_3 < b_4 > ... on n elements.
    static FencePoset fence(int n);
};

FencePoset fence_poset_of(const SnakeGraph& snake);

}  // namespace snakes
