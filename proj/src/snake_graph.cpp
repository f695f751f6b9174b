#include "snakegraphs/snake_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace snakes {

Edge::Edge(Point p, Point q) : a(p), b(q) {
    if (b < a) std::swap(a, b);
}

namespace {

std::vector<Edge> tile_edges(Point sw) {
    Point se{sw.x + 1, sw.y}, nw{sw.x, sw.y + 1}, ne{sw.x + 1, sw.y + 1};
    return {Edge(sw, se), Edge(sw, nw), Edge(se, ne), Edge(nw, ne)};
}

}  // namespace

SnakeGraph SnakeGraph::from_directions(const std::string& directions) {
    SnakeGraph g;
    g.directions_ = directions;
    Point cur{0, 0};
    g.tiles_.push_back(cur);
    for (char c : directions) {
        if (c == 'R') ++cur.x;
        else if (c == 'U') ++cur.y;
        else throw std::invalid_argument("direction word must be over {R,U}");
        g.tiles_.push_back(cur);
    }
    std::set<Edge> edges;
    for (Point t : g.tiles_)
        for (const Edge& e : tile_edges(t)) edges.insert(e);
    g.edges_.assign(edges.begin(), edges.end());
    return g;
}

SnakeGraph SnakeGraph::single_edge() {
    SnakeGraph g;
    g.edges_ = {Edge({0, 0}, {0, 1})};
    return g;
}

SnakeGraph SnakeGraph::straight_row(int tiles) {
    if (tiles == 0) return single_edge();
    return from_directions(std::string(static_cast<std::size_t>(tiles - 1), 'R'));
}

std::vector<Point> SnakeGraph::vertices() const {
    std::set<Point> vs;
    for (const Edge& e : edges_) {
        vs.insert(e.a);
        vs.insert(e.b);
    }
    return {vs.begin(), vs.end()};
}

Point SnakeGraph::sw_corner() const {
    if (degenerate()) return edges_.front().a;
    return tiles_.front();
}

Point SnakeGraph::ne_corner() const {
    if (degenerate()) return edges_.front().b;
    return {tiles_.back().x + 1, tiles_.back().y + 1};
}

bool SnakeGraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

SnakeGraph build_snake(const ContinuedFraction& cf) {
    const int d = cf.sum() - 1;
    if (d == 0) return SnakeGraph::single_edge();
    const std::string& signs = cf_to_sign_sequence(cf).signs;  // length d+1
    // Equal consecutive signs turn the snake, a sign change continues it
    // straight; the virtual step into the first tile points up, so a1 >= 2
    // makes the first internal step go right.
    std::string word;
    char prev = 'U';
    for (int i = 1; i < d; ++i) {
        char dir;
        if (signs[i] == signs[i - 1])
            dir = (prev == 'U') ? 'R' : 'U';
        else
            dir = prev;
        word += dir;
        prev = dir;
    }
    return SnakeGraph::from_directions(word);
}

SignSequence sign_sequence_of(const SnakeGraph& snake) {
    if (snake.degenerate()) {
        SignSequence s;
        s.signs = "-";
        s.block_ends = {1};
        return s;
    }
    const std::string& word = snake.directions();
    const int d = snake.tile_count();
    std::string signs(static_cast<std::size_t>(d + 1), '-');
    char prev = 'U';
    for (int i = 1; i <= d; ++i) {
        // Invert the construction rule; the final sign (i == d) is the
        // induced choice of the last edge and continues the last block's
        // turning pattern.
        char dir;
        if (i < d) dir = word[static_cast<std::size_t>(i - 1)];
        else dir = (prev == 'U') ? 'R' : 'U';  // e_d: pick the turning option
        bool turn = (dir != prev);
        signs[static_cast<std::size_t>(i)] =
            turn ? signs[static_cast<std::size_t>(i - 1)]
                 : (signs[static_cast<std::size_t>(i - 1)] == '-' ? '+' : '-');
        prev = dir;
    }
    SignSequence out;
    out.signs = signs;
    int pos = 0;
    for (std::size_t i = 1; i <= signs.size(); ++i) {
        ++pos;
        if (i == signs.size() || signs[i] != signs[i - 1]) out.block_ends.push_back(pos);
    }
    return out;
}

FencePoset FencePoset::chain(int n) {
    FencePoset p;
    p.size = n;
    for (int i = 0; i + 1 < n; ++i) p.relations.push_back({i, i + 1});
    return p;
}

FencePoset FencePoset::fence(int n) {
    FencePoset p;
    p.size = n;
    for (int i = 0; i + 1 < n; ++i) {
        if (i % 2 == 0) p.relations.push_back({i, i + 1});
        else p.relations.push_back({i + 1, i});
    }
    return p;
}

FencePoset fence_poset_of(const SnakeGraph& snake) {
    FencePoset p;
    p.size = snake.tile_count();
    const std::string& word = snake.directions();
    for (std::size_t i = 0; i < word.size(); ++i) {
        int a = static_cast<int>(i), b = a + 1;
        if (word[i] == 'U') p.relations.push_back({a, b});  // a below b
        else p.relations.push_back({b, a});                 // b right of a
    }
    return p;
}

}  // namespace snakes
