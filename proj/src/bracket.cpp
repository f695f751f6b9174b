#include "snakegraphs/bracket.hpp"

#include <stdexcept>

#include "snakegraphs/enumerate.hpp"

namespace snakes {

namespace {

mpz_class bracket_by_enumeration(const ContinuedFraction& cf, int m) {
    // Weighted m-dimer covers of the straight snake with n vertical edges;
    // the vertical edge at x = k carries weight ((a_{k+1} choose p)).
    const int n = static_cast<int>(cf.length());
    SnakeGraph row = SnakeGraph::straight_row(n - 1);
    mpz_class total;
    for (const EdgeMultiset& cover : enumerate_m_dimers(row.edges(), m)) {
        mpz_class weight = 1;
        for (const auto& [edge, mult] : cover)
            if (edge.vertical()) weight *= multichoose(cf.part(static_cast<std::size_t>(edge.a.x)), mult);
        total += weight;
    }
    return total;
}

}  // namespace

mpz_class bracket(const ContinuedFraction& cf, int m, BracketMode mode) {
    switch (mode) {
        case BracketMode::Enumeration:
            return bracket_by_enumeration(cf, m);
        case BracketMode::Recurrence: {
            BigMatrix grid(m + 1);
            // One-part grid directly from the straight-snake count:
            // grid(i,j) = ((a_1 choose m+2-(i+1)-(j+1))) with 0-based i,j.
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= m; ++j) grid.at(i, j) = multichoose(cf.part(0), m - i - j);
            for (std::size_t k = 1; k < cf.length(); ++k)
                grid = bracket_recurrence_step(grid, cf.part(k), m);
            return grid.at(0, 0);
        }
        case BracketMode::Matrix:
            return lambda_product(cf, m).at(0, 0);
    }
    throw std::invalid_argument("unknown bracket mode");
}

mpz_class bordered_bracket(int i, const ContinuedFraction& cf, int j, int m) {
    if (i < 0 || j < 0 || i > m || j > m)
        throw std::domain_error("border multiplicities must lie in [0, m]");
    // Covers of the straight snake for (1, a_1..a_n, 1): vertical
    // multiplicities p_1..p_{n+2} with p_1 = i, p_{n+2} = j force the
    // horizontal runs h_k = m - p_k - h_{k-1}; weights sit on the interior.
    const int n = static_cast<int>(cf.length());
    mpz_class total;
    auto dfs = [&](auto&& self, int k, int h, const mpz_class& weight) -> void {
        if (k == n) {
            if (h == m - j) total += weight;
            return;
        }
        for (int p = 0; p + h <= m; ++p)
            self(self, k + 1, m - p - h, weight * multichoose(cf.part(static_cast<std::size_t>(k)), p));
    };
    dfs(dfs, 0, m - i, mpz_class(1));
    return total;
}

BigMatrix bordered_bracket_grid(const ContinuedFraction& cf, int m) {
    BigMatrix out(m + 1);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) out.at(i, j) = bordered_bracket(m - i, cf, m - j, m);
    return out;
}

BigMatrix bracket_recurrence_step(const BigMatrix& grid, int a_next, int m) {
    if (grid.size() != m + 1) throw std::invalid_argument("grid size mismatch");
    // ^i[[..,a]]^j = sum_r ^i[[..]]^{r+m-j} ((a choose r)) with superscripts
    // s mapped to matrix indices m - s.
    BigMatrix out(m + 1);
    for (int row = 0; row <= m; ++row)
        for (int col = 0; col <= m; ++col) {
            mpz_class acc;
            for (int r = 0; r <= m - col; ++r)
                acc += grid.at(row, m - col - r) * multichoose(a_next, r);
            out.at(row, col) = acc;
        }
    return out;
}

ContinuedFraction normalize_cf_for_bracket(const ContinuedFraction& cf) {
    std::vector<int> parts = cf.parts();
    if (parts.front() > 1) {
        parts.front() -= 1;
        parts.insert(parts.begin(), 1);
    }
    if (parts.back() > 1) {
        parts.back() -= 1;
        parts.push_back(1);
    }
    return ContinuedFraction(std::move(parts));
}

}  // namespace snakes
