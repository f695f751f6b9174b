#include "snakegraphs/genfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "snakegraphs/cf.hpp"
#include "snakegraphs/enumerate.hpp"

namespace snakes {

namespace {

// All linear extensions, visiting available elements in increasing order so
// the first extension produced is the lexicographically least one.
void extensions_rec(const FencePoset& poset, std::vector<int>& indegree,
                    std::vector<bool>& placed, std::vector<int>& order,
                    std::vector<std::vector<int>>& out) {
    if (order.size() == static_cast<std::size_t>(poset.size)) {
        out.push_back(order);
        return;
    }
    for (int e = 0; e < poset.size; ++e) {
        if (placed[e] || indegree[e] != 0) continue;
        placed[e] = true;
        for (const auto& [lo, hi] : poset.relations)
            if (lo == e) --indegree[hi];
        order.push_back(e);
        extensions_rec(poset, indegree, placed, order, out);
        order.pop_back();
        for (const auto& [lo, hi] : poset.relations)
            if (lo == e) ++indegree[hi];
        placed[e] = false;
    }
}

std::vector<std::vector<int>> all_extensions(const FencePoset& poset) {
    std::vector<int> indegree(static_cast<std::size_t>(poset.size), 0);
    for (const auto& [lo, hi] : poset.relations) ++indegree[hi];
    std::vector<bool> placed(static_cast<std::size_t>(poset.size), false);
    std::vector<int> order;
    std::vector<std::vector<int>> out;
    extensions_rec(poset, indegree, placed, order, out);
    return out;
}

}  // namespace

std::vector<LinearExtensionStats> linear_extensions_with_stats(
    const FencePoset& poset, const std::vector<int>& reference) {
    std::vector<std::vector<int>> exts = all_extensions(poset);
    if (exts.empty()) throw std::logic_error("poset has no linear extension");
    const std::vector<int>& ref = reference.empty() ? exts.front() : reference;
    if (ref.size() != static_cast<std::size_t>(poset.size))
        throw std::invalid_argument("reference extension has the wrong size");
    std::vector<int> label(static_cast<std::size_t>(poset.size));
    for (std::size_t k = 0; k < ref.size(); ++k) label[static_cast<std::size_t>(ref[k])] = static_cast<int>(k) + 1;

    std::vector<LinearExtensionStats> out;
    for (const std::vector<int>& ext : exts) {
        LinearExtensionStats s;
        s.order = ext;
        for (int e : ext) s.permutation.push_back(label[static_cast<std::size_t>(e)]);
        for (std::size_t k = 1; k < s.permutation.size(); ++k)
            if (s.permutation[k - 1] > s.permutation[k]) {
                ++s.descents;
                s.major_index += static_cast<long>(k);
            }
        out.push_back(std::move(s));
    }
    return out;
}

QPolynomial stanley_U(const FencePoset& poset, int m) {
    const int p = poset.size;
    QPolynomial u;
    for (const LinearExtensionStats& s : linear_extensions_with_stats(poset)) {
        QPolynomial term = q_binomial(p + m - s.descents, p);
        u = u + QPolynomial::monomial(1, static_cast<std::size_t>(s.major_index)) * term;
    }
    return u;
}

QXRational stanley_F(const FencePoset& poset) {
    QXRational f;
    f.pochhammer = poset.size + 1;
    f.numerator_x.assign(static_cast<std::size_t>(poset.size) + 1, QPolynomial{});
    for (const LinearExtensionStats& s : linear_extensions_with_stats(poset)) {
        std::size_t d = static_cast<std::size_t>(s.descents);
        f.numerator_x[d] =
            f.numerator_x[d] + QPolynomial::monomial(1, static_cast<std::size_t>(s.major_index));
    }
    while (f.numerator_x.size() > 1 && f.numerator_x.back().is_zero()) f.numerator_x.pop_back();
    return f;
}

std::vector<QPolynomial> series_in_x(const QXRational& f, std::size_t order) {
    // 1/(x;q)_k = prod_{i=0}^{k-1} sum_t q^{it} x^t, convolved factor by factor.
    std::vector<QPolynomial> inv(order + 1, QPolynomial::one());
    for (int i = 1; i < f.pochhammer; ++i) {
        std::vector<QPolynomial> next(order + 1);
        for (std::size_t t = 0; t <= order; ++t)
            for (std::size_t s = 0; s <= t; ++s)
                next[t] = next[t] + inv[t - s] * QPolynomial::monomial(
                                                     1, static_cast<std::size_t>(i) * s);
        inv = std::move(next);
    }
    std::vector<QPolynomial> out(order + 1);
    for (std::size_t t = 0; t <= order; ++t)
        for (std::size_t s = 0; s <= t && s < f.numerator_x.size(); ++s)
            out[t] = out[t] + f.numerator_x[s] * inv[t - s];
    return out;
}

XRational F_at_q1(const FencePoset& poset) {
    QXRational f = stanley_F(poset);
    XRational out;
    out.denominator_power = f.pochhammer;
    for (const QPolynomial& c : f.numerator_x) out.numerator.push_back(c.at_one());
    while (out.numerator.size() > 1 && out.numerator.back() == 0) out.numerator.pop_back();
    return out;
}

QPolynomial q_fibonacci(int k) {
    if (k < 1) throw std::domain_error("q_fibonacci needs k >= 1");
    // straight snake with k tiles in its canonical presentation [1^{k+1}]
    return rank_generating_function(build_snake(ContinuedFraction(std::vector<int>(k + 1, 1))), 1);
}

MultiPoly quasi_sym_poly(const SnakeGraph& snake, int m) {
    MultiPoly out;
    for (const EdgeMultiset& path : enumerate_m_lattice_paths(snake, m)) {
        auto labels = path_to_rpp(snake, path, m);
        if (!labels) throw std::logic_error("enumerated path failed RPP validation");
        std::vector<int> exponents(static_cast<std::size_t>(m) + 1, 0);
        for (int v : *labels) ++exponents[static_cast<std::size_t>(v)];
        out[exponents] += 1;
    }
    return out;
}

QPolynomial principal_specialization(const MultiPoly& poly) {
    QPolynomial out;
    for (const auto& [exponents, coeff] : poly) {
        std::size_t deg = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            deg += i * static_cast<std::size_t>(exponents[i]);
        out = out + QPolynomial::monomial(coeff, deg);
    }
    return out;
}

UnimodalityVerdict unimodality_report(const QPolynomial& poly) {
    UnimodalityVerdict v;
    v.unimodal = poly.unimodal();
    return v;
}

UnimodalityVerdict unimodality_scan(int max_sum, int max_m) {
    for (int total = 1; total <= max_sum; ++total)
        for (const std::vector<int>& parts : compositions(total)) {
            ContinuedFraction cf(parts);
            SnakeGraph dual = build_snake(dual_cf(cf));
            FencePoset poset = fence_poset_of(dual);
            for (int m = 1; m <= max_m; ++m) {
                if (!stanley_U(poset, m).unimodal()) {
                    UnimodalityVerdict v;
                    v.unimodal = false;
                    v.counterexample_cf = parts;
                    v.counterexample_m = m;
                    return v;
                }
            }
        }
    return UnimodalityVerdict{};
}

std::vector<std::vector<int>> compositions(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int a = 1; a <= left; ++a) {
            cur.push_back(a);
            self(self, left - a);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

}  // namespace snakes
