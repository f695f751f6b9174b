#include "snakegraphs/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace snakes {

namespace {

struct DimerSearch {
    const std::vector<Edge>& edges;
    int m;
    std::map<Point, int> need;        // remaining multiplicity per vertex
    std::map<Point, int> last_edge;   // index of the last incident edge
    std::vector<int> chosen;
    std::vector<EdgeMultiset> out;

    DimerSearch(const std::vector<Edge>& edges, int m) : edges(edges), m(m) {
        for (std::size_t k = 0; k < edges.size(); ++k) {
            need[edges[k].a] = m;
            need[edges[k].b] = m;
            last_edge[edges[k].a] = static_cast<int>(k);
            last_edge[edges[k].b] = static_cast<int>(k);
        }
        chosen.resize(edges.size());
    }

    void run(std::size_t k) {
        if (k == edges.size()) {
            EdgeMultiset cover;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (chosen[i] > 0) cover[edges[i]] = chosen[i];
            out.push_back(std::move(cover));
            return;
        }
        const Edge& e = edges[k];
        int cap = std::min(need[e.a], need[e.b]);
        bool last_a = last_edge[e.a] == static_cast<int>(k);
        bool last_b = last_edge[e.b] == static_cast<int>(k);
        for (int mult = 0; mult <= cap; ++mult) {
            // A vertex whose incident edges are all decided must be full.
            if (last_a && need[e.a] != mult) continue;
            if (last_b && need[e.b] != mult) continue;
            chosen[k] = mult;
            need[e.a] -= mult;
            need[e.b] -= mult;
            run(k + 1);
            need[e.a] += mult;
            need[e.b] += mult;
        }
        chosen[k] = 0;
    }
};

}  // namespace

std::vector<EdgeMultiset> enumerate_m_dimers(const std::vector<Edge>& edges, int m) {
    if (m < 0) throw std::domain_error("m must be >= 0");
    if (m == 0) return {EdgeMultiset{}};
    DimerSearch search(edges, m);
    search.run(0);
    return search.out;
}

mpz_class count_m_dimers(const std::vector<Edge>& edges, int m) {
    return mpz_class(enumerate_m_dimers(edges, m).size());
}

std::vector<std::vector<Edge>> enumerate_lattice_paths(const SnakeGraph& snake) {
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> current;
    Point target = snake.ne_corner();

    auto dfs = [&](auto&& self, Point at) -> void {
        if (at == target) {
            out.push_back(current);
            return;
        }
        for (Point next : {Point{at.x + 1, at.y}, Point{at.x, at.y + 1}}) {
            Edge step(at, next);
            if (!snake.has_edge(step)) continue;
            current.push_back(step);
            self(self, next);
            current.pop_back();
        }
    };
    dfs(dfs, snake.sw_corner());
    return out;
}

std::vector<EdgeMultiset> enumerate_m_lattice_paths(const SnakeGraph& snake, int m) {
    if (m < 0) throw std::domain_error("m must be >= 0");
    if (m == 0) return {EdgeMultiset{}};
    std::vector<std::vector<Edge>> paths = enumerate_lattice_paths(snake);
    std::set<EdgeMultiset> classes;
    // Multisets of m paths, identified by their common edge multiset.
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t lo) -> void {
        if (pick.size() == static_cast<std::size_t>(m)) {
            EdgeMultiset ms;
            for (std::size_t idx : pick)
                for (const Edge& e : paths[idx]) ++ms[e];
            classes.insert(std::move(ms));
            return;
        }
        for (std::size_t i = lo; i < paths.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return {classes.begin(), classes.end()};
}

namespace {

// Tiles grouped by column, y-sorted; label of tile (x,y) is the number of
// horizontal crossings of column x strictly above y.
std::map<int, std::vector<int>> tile_columns(const SnakeGraph& snake) {
    std::map<int, std::vector<int>> cols;
    for (Point t : snake.tiles()) cols[t.x].push_back(t.y);
    for (auto& [x, ys] : cols) std::sort(ys.begin(), ys.end());
    return cols;
}

}  // namespace

std::optional<RppLabeling> path_to_rpp(const SnakeGraph& snake, const EdgeMultiset& path, int m) {
    if (snake.degenerate()) {
        EdgeMultiset expect;
        if (m > 0) expect[snake.edges().front()] = m;
        if (path != expect) return std::nullopt;
        return RppLabeling{};
    }
    RppLabeling labels(static_cast<std::size_t>(snake.tile_count()));
    for (std::size_t i = 0; i < snake.tiles().size(); ++i) {
        Point t = snake.tiles()[i];
        int above = 0;
        for (const auto& [edge, mult] : path) {
            if (!edge.horizontal()) continue;
            if (edge.a.x == t.x && edge.a.y > t.y) above += mult;
        }
        if (above > m) return std::nullopt;
        labels[i] = above;
    }
    // Valid iff the canonical multiset of these labels reproduces the input.
    if (rpp_to_path(snake, labels, m) != path) return std::nullopt;
    return labels;
}

EdgeMultiset rpp_to_path(const SnakeGraph& snake, const RppLabeling& labels, int m) {
    EdgeMultiset out;
    if (snake.degenerate()) {
        if (m > 0) out[snake.edges().front()] = m;
        return out;
    }
    if (labels.size() != static_cast<std::size_t>(snake.tile_count()))
        throw std::invalid_argument("one label per tile expected");
    std::map<Point, int> label_at;
    for (std::size_t i = 0; i < labels.size(); ++i) label_at[snake.tiles()[i]] = labels[i];
    auto cols = tile_columns(snake);
    const int x0 = snake.sw_corner().x;
    const int x1 = snake.tiles().back().x;
    const Point ne = snake.ne_corner();

    for (int j = 1; j <= m; ++j) {
        // Path j crosses column x just above the highest tile with label >= j.
        Point at = snake.sw_corner();
        for (int x = x0; x <= x1; ++x) {
            const std::vector<int>& ys = cols.at(x);
            int h = ys.front();
            for (int y : ys)
                if (label_at[{x, y}] >= j) h = y + 1;
            for (; at.y < h; ++at.y) ++out[Edge(at, {at.x, at.y + 1})];
            if (at.y > h) throw std::invalid_argument("labels are not a reverse plane partition");
            ++out[Edge(at, {at.x + 1, at.y})];
            at.x += 1;
        }
        for (; at.y < ne.y; ++at.y) ++out[Edge(at, {at.x, at.y + 1})];
    }
    return out;
}

std::pair<SnakeGraph, EdgeMultiset> dimer_to_lattice_path(const SnakeGraph& snake,
                                                          const EdgeMultiset& cover) {
    if (snake.degenerate()) return {snake, cover};
    std::vector<Point> tiles = snake.tiles();
    std::vector<std::pair<Edge, int>> edges(cover.begin(), cover.end());

    for (std::size_t i = 0; i < tiles.size(); ++i) {
        // Reflect everything beyond the anti-diagonal of tile i across the
        // main diagonal through its SW and NE corners.
        const int cut = tiles[i].x + tiles[i].y + 1;  // line u+v = cut
        const int axis = tiles[i].x - tiles[i].y;     // line u-v = axis
        auto reflect = [axis](Point p) { return Point{p.y + axis, p.x - axis}; };
        for (auto& [edge, mult] : edges) {
            int lo = std::min(edge.a.x + edge.a.y, edge.b.x + edge.b.y);
            if (lo >= cut) edge = Edge(reflect(edge.a), reflect(edge.b));
        }
        for (std::size_t jj = i + 1; jj < tiles.size(); ++jj) {
            Point p = tiles[jj];
            if (p.x + p.y >= cut) {
                Point r = reflect({p.x + 1, p.y + 1});  // NE corner maps to NE corner
                tiles[jj] = {r.x - 1, r.y - 1};
            }
        }
    }

    std::string word;
    for (std::size_t k = 1; k < tiles.size(); ++k) {
        if (tiles[k].x == tiles[k - 1].x + 1 && tiles[k].y == tiles[k - 1].y) word += 'R';
        else if (tiles[k].x == tiles[k - 1].x && tiles[k].y == tiles[k - 1].y + 1) word += 'U';
        else throw std::logic_error("reflection broke the snake shape");
    }
    SnakeGraph dual = SnakeGraph::from_directions(word);
    EdgeMultiset path;
    for (const auto& [edge, mult] : edges)
        if (mult > 0) path[edge] += mult;
    return {dual, path};
}

QPolynomial rank_generating_function(const SnakeGraph& snake, int m) {
    // Rank of a cover = size of the RPP of its dual lattice path.
    SignSequence seq = sign_sequence_of(snake);
    std::vector<int> parts;
    int prev = 0;
    for (int end : seq.block_ends) {
        parts.push_back(end - prev);
        prev = end;
    }
    SnakeGraph dual = build_snake(dual_cf(ContinuedFraction(parts)));
    QPolynomial out;
    for (const EdgeMultiset& path : enumerate_m_lattice_paths(dual, m)) {
        auto labels = path_to_rpp(dual, path, m);
        if (!labels) throw std::logic_error("enumerated path failed RPP validation");
        long size = 0;
        for (int v : *labels) size += v;
        out = out + QPolynomial::monomial(1, static_cast<std::size_t>(size));
    }
    return out;
}

}  // namespace snakes
