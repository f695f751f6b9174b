#include "snakegraphs/gcf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snakes {

namespace {

// ---- small exact polynomial helpers (coefficients ascending) ----

PolyMod poly_trim(PolyMod p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

mpq_class poly_eval(const PolyMod& p, const mpq_class& t) {
    mpq_class v;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
    return v;
}

PolyMod poly_derivative(const PolyMod& p) {
    PolyMod d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    return d;
}

// Remainder of a by b (b nonzero).
PolyMod poly_rem(PolyMod a, const PolyMod& b) {
    a = poly_trim(std::move(a));
    PolyMod bb = poly_trim(b);
    while (a.size() >= bb.size() && !a.empty()) {
        mpq_class f = a.back() / bb.back();
        std::size_t shift = a.size() - bb.size();
        for (std::size_t k = 0; k < bb.size(); ++k) a[k + shift] -= f * bb[k];
        a = poly_trim(std::move(a));
    }
    return a;
}

PolyMod poly_mul(const PolyMod& a, const PolyMod& b) {
    if (a.empty() || b.empty()) return {};
    PolyMod out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

PolyMod poly_sub(PolyMod a, const PolyMod& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
    return poly_trim(std::move(a));
}

PolyMod poly_scale(PolyMod a, const mpq_class& c) {
    for (auto& x : a) x *= c;
    return poly_trim(std::move(a));
}

// Sturm chain; counts distinct real roots in (a, b].
std::vector<PolyMod> sturm_chain(const PolyMod& p) {
    std::vector<PolyMod> chain{poly_trim(p), poly_trim(poly_derivative(p))};
    while (!chain.back().empty() && chain.back().size() > 1) {
        PolyMod r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<PolyMod>& chain, const mpq_class& t) {
    int count = 0, prev = 0;
    for (const PolyMod& p : chain) {
        if (p.empty()) continue;
        int s = sgn(poly_eval(p, t));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int roots_in(const std::vector<PolyMod>& chain, const mpq_class& a, const mpq_class& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Monic irreducible factors of a monic cubic with integer coefficients
// (a reducible cubic has an integer root dividing the constant term).
std::vector<PolyMod> cubic_factors(const std::vector<mpz_class>& c) {
    PolyMod p{mpq_class(c[0]), mpq_class(c[1]), mpq_class(c[2]), 1};
    std::vector<mpz_class> candidates;
    mpz_class abs0 = abs(c[0]);
    for (mpz_class d = 1; d * d <= abs0 && d < 1000000; ++d) {
        if (abs0 % d != 0) continue;
        for (const mpz_class& r : {d, mpz_class(abs0 / d)}) {
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    }
    std::vector<PolyMod> factors;
    PolyMod rest = p;
    for (const mpz_class& r : candidates) {
        while (rest.size() > 1 && poly_eval(rest, mpq_class(r)) == 0) {
            factors.push_back({mpq_class(-r), 1});
            // synthetic division by (t - r)
            PolyMod quot(rest.size() - 1);
            quot[rest.size() - 2] = rest.back();
            for (std::size_t k = rest.size() - 2; k-- > 0;)
                quot[k] = rest[k + 1] + mpq_class(r) * quot[k + 1];
            rest = std::move(quot);
        }
    }
    if (rest.size() > 1) factors.push_back(rest);
    return factors;
}

// ---- arithmetic in Q[t]/(h) with h monic ----

PolyMod mod_reduce(const PolyMod& a, const PolyMod& h) { return poly_rem(a, h); }

PolyMod mod_mul(const PolyMod& a, const PolyMod& b, const PolyMod& h) {
    return poly_rem(poly_mul(a, b), h);
}

// Inverse of a modulo h via extended Euclid; empty result if not invertible.
PolyMod mod_inverse(const PolyMod& a, const PolyMod& h) {
    PolyMod r0 = poly_trim(h), r1 = mod_reduce(a, h);
    PolyMod s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        PolyMod q;
        PolyMod rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            mpq_class f = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1);
            q[shift] += f;
            for (std::size_t k = 0; k < r1.size(); ++k) rem[k + shift] -= f * r1[k];
            rem = poly_trim(std::move(rem));
        }
        PolyMod s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = std::move(s2);
    }
    if (r0.size() != 1) return {};  // gcd not a unit
    return mod_reduce(poly_scale(s0, 1 / r0[0]), h);
}

mpq_class column_ratio(const BigMatrix& x, int row, int col, int denom_row) {
    mpq_class r(x.at(row, col), x.at(denom_row, col));
    r.canonicalize();
    return r;
}

// Range of X(row,j)/X(bottom,j) over the columns; second member of the pair
// is false when some column has a zero denominator (unbounded above).
struct ColumnHull {
    mpq_class lo, hi;
    bool bounded = true;
    bool any_finite = false;
};

ColumnHull column_hull(const BigMatrix& x, int row, int denom_row) {
    ColumnHull h;
    for (int j = 0; j < x.size(); ++j) {
        if (x.at(denom_row, j) == 0) {
            h.bounded = false;
            continue;
        }
        mpq_class r = column_ratio(x, row, j, denom_row);
        if (!h.any_finite) {
            h.lo = h.hi = r;
            h.any_finite = true;
        } else {
            h.lo = std::min(h.lo, r);
            h.hi = std::max(h.hi, r);
        }
    }
    return h;
}

}  // namespace

CfVector cf_vector_recursive(const ContinuedFraction& cf, int m) {
    // v[j] = r_{m-j,m}; base case v[j] = ((a_n choose m-j)), then
    // r_k(a,rest) = sum_i ((a choose i)) r_{m-k+i}(rest) / r_m(rest).
    const auto& parts = cf.parts();
    CfVector v(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) v[static_cast<std::size_t>(j)] = mpq_class(multichoose(parts.back(), m - j));
    for (std::size_t idx = parts.size() - 1; idx-- > 0;) {
        CfVector next(static_cast<std::size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) {
            mpq_class acc;
            for (int i = 0; i <= k; ++i)
                acc += mpq_class(multichoose(parts[idx], i)) * v[static_cast<std::size_t>(k - i)];
            next[static_cast<std::size_t>(m - k)] = acc / v[0];
        }
        for (auto& q : next) q.canonicalize();
        v = std::move(next);
    }
    return v;
}

CfVector cf_vector_matrix(const ContinuedFraction& cf, int m) {
    BigMatrix x = lambda_product(cf, m);
    CfVector v(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) v[static_cast<std::size_t>(j)] = column_ratio(x, j, 0, m);
    return v;
}

LimitEnclosure r_limit(const WordSource& word, int i, int m, const mpq_class& tol,
                       long max_factors) {
    if (i < 0 || i > m) throw std::domain_error("index i must lie in [0, m]");
    const int row = m - i;
    auto part_at = [&](long k) -> int {
        if (k < static_cast<long>(word.prefix.size())) return word.prefix[static_cast<std::size_t>(k)];
        std::size_t off = static_cast<std::size_t>(k) - word.prefix.size();
        return word.period[off % word.period.size()];
    };
    LimitEnclosure out;
    if (word.period.empty()) {
        if (word.prefix.empty()) throw std::invalid_argument("empty word");
        BigMatrix x = lambda_product(ContinuedFraction(word.prefix), m);
        out.lower = out.upper = column_ratio(x, row, 0, m);
        out.iterations = static_cast<long>(word.prefix.size());
        return out;
    }
    BigMatrix x = lambda_matrix(part_at(0), m);
    out.iterations = 1;
    while (out.iterations < max_factors) {
        ColumnHull h = column_hull(x, row, m);
        if (h.bounded && h.hi - h.lo <= tol) {
            out.lower = h.lo;
            out.upper = h.hi;
            return out;
        }
        x = x * lambda_matrix(part_at(out.iterations), m);
        ++out.iterations;
    }
    ColumnHull h = column_hull(x, row, m);
    out.lower = h.lo;
    out.upper = h.bounded ? h.hi : h.lo;
    out.converged = h.bounded && h.hi - h.lo <= tol;
    return out;
}

double polygon_diagonal(int m, int i) {
    const double pi = std::acos(-1.0);
    return std::sin((i + 1) * pi / (2 * m + 3)) / std::sin(pi / (2 * m + 3));
}

mpz_class pow_10(unsigned k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

std::pair<mpq_class, mpq_class> eval_poly_interval(const PolyMod& p, const mpq_class& lo,
                                                   const mpq_class& hi) {
    if (lo < 0 || hi < lo) throw std::domain_error("need 0 <= lo <= hi");
    mpq_class lo_pow = 1, hi_pow = 1, min_v, max_v;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] >= 0) {
            min_v += p[k] * lo_pow;
            max_v += p[k] * hi_pow;
        } else {
            min_v += p[k] * hi_pow;
            max_v += p[k] * lo_pow;
        }
        lo_pow *= lo;
        hi_pow *= hi;
    }
    min_v.canonicalize();
    max_v.canonicalize();
    return {min_v, max_v};
}

CubicData periodic_cubic(const ContinuedFraction& period, const mpq_class& root_width) {
    const int m = 2;
    BigMatrix x = lambda_product(period, m);
    CubicData out;
    std::vector<mpz_class> c = char_poly_3x3(x);
    out.char_poly = {c[0], c[1], c[2], 1};

    PolyMod p{mpq_class(c[0]), mpq_class(c[1]), mpq_class(c[2]), 1};
    std::vector<PolyMod> chain = sturm_chain(p);
    // The dominant eigenvalue is the largest real root; bisect down from the
    // Cauchy bound keeping at least one root to the right of the lower end.
    mpq_class hi = 1 + std::max({abs(mpq_class(c[0])), abs(mpq_class(c[1])), abs(mpq_class(c[2]))});
    mpq_class lo = 0;
    if (roots_in(chain, lo, hi) < 1) throw std::logic_error("no positive eigenvalue found");
    while (hi - lo > root_width || roots_in(chain, lo, hi) != 1) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        if (roots_in(chain, mid, hi) >= 1) lo = mid;
        else hi = mid;
    }
    out.root_lower = lo;
    out.root_upper = hi;

    // Pick the irreducible factor vanishing on the isolating interval and
    // solve (X - tI)(alpha, beta, 1)^T = 0 for alpha, beta in Q[t]/(h).
    PolyMod h;
    for (const PolyMod& f : cubic_factors(c)) {
        mpq_class va = poly_eval(f, lo), vb = poly_eval(f, hi);
        if (va == 0 || vb == 0 || sgn(va) != sgn(vb)) {
            h = f;
            break;
        }
    }
    if (h.empty()) throw std::logic_error("no factor isolates the eigenvalue");

    const PolyMod t = mod_reduce(PolyMod{0, 1}, h);
    auto entry = [&](int r, int cc) { return PolyMod{mpq_class(x.at(r, cc))}; };
    auto minus_t_if = [&](PolyMod e, bool yes) { return yes ? poly_sub(std::move(e), t) : e; };
    // Rows r1, r2 of (X - tI) give a 2x2 system in (alpha, beta).
    for (auto [r1, r2] : {std::pair{1, 2}, std::pair{0, 2}, std::pair{0, 1}}) {
        PolyMod a11 = minus_t_if(entry(r1, 0), r1 == 0), a12 = minus_t_if(entry(r1, 1), r1 == 1);
        PolyMod a21 = minus_t_if(entry(r2, 0), r2 == 0), a22 = minus_t_if(entry(r2, 1), r2 == 1);
        PolyMod b1 = poly_scale(minus_t_if(entry(r1, 2), r1 == 2), -1);
        PolyMod b2 = poly_scale(minus_t_if(entry(r2, 2), r2 == 2), -1);
        PolyMod det = poly_sub(mod_mul(a11, a22, h), mod_mul(a12, a21, h));
        PolyMod inv = mod_inverse(det, h);
        if (inv.empty()) continue;
        out.alpha = mod_mul(poly_sub(mod_mul(b1, a22, h), mod_mul(a12, b2, h)), inv, h);
        out.beta = mod_mul(poly_sub(mod_mul(a11, b2, h), mod_mul(b1, a21, h)), inv, h);
        return out;
    }
    throw std::logic_error("eigenvector system is singular for every row pair");
}

mpq_class r_rational(const mpq_class& x, int m, int i) {
    if (i < 0) i = m;
    if (i > m) throw std::domain_error("index i must lie in [0, m]");
    CfExpansion e = real_to_cf(x);
    if (!e.exact) throw std::logic_error("rational expansion did not terminate");
    BigMatrix prod = lambda_product(ContinuedFraction(e.parts), m);
    return column_ratio(prod, m - i, 0, m);
}

LimitEnclosure r_real(double x, int m, const mpq_class& tol) {
    const int i = m, row = 0;
    CfExpansion e = real_to_cf(x);
    LimitEnclosure out;
    if (e.exact) {
        BigMatrix prod = lambda_product(ContinuedFraction(e.parts), m);
        out.lower = out.upper = column_ratio(prod, row, 0, m);
        out.iterations = static_cast<long>(e.parts.size());
        return out;
    }
    out.iterations = static_cast<long>(e.parts.size());
    if (e.parts.size() >= 2) {
        // Every real consistent with the double extends this prefix, so its
        // value lies in the column hull of the prefix product.
        BigMatrix prod = lambda_product(ContinuedFraction(e.parts), m);
        ColumnHull h = column_hull(prod, row, m);
        out.lower = h.lo;
        out.upper = h.hi;
        out.converged = h.bounded && h.hi - h.lo <= tol;
        if (!h.bounded) out.upper = h.lo;
        return out;
    }
    // x is within float noise of an integer A: the expansion starts with
    // [A, ...] or [A-1, 1, ...]; take the union of both certified hulls.
    long a = std::lround(x);
    ColumnHull h1;  // words [A, b, ...]: every column ratio decreases in b
    {
        BigMatrix prod = lambda_matrix(static_cast<int>(a), m) * lambda_matrix(1, m);
        h1 = column_hull(prod, row, m);
        h1.lo = std::min(h1.lo, mpq_class(multichoose(static_cast<int>(a), i)));  // b -> infinity limit
    }
    out.lower = h1.lo;
    out.upper = h1.hi;
    bool bounded = h1.bounded;
    if (a >= 2) {
        BigMatrix prod = lambda_matrix(static_cast<int>(a - 1), m) * lambda_matrix(1, m);
        ColumnHull h2 = column_hull(prod, row, m);
        out.lower = std::min(out.lower, h2.lo);
        out.upper = std::max(out.upper, h2.hi);
        bounded = bounded && h2.bounded;
    }
    out.converged = bounded && out.upper - out.lower <= tol;
    return out;
}

std::vector<CurveSample> sample_r_curve(int m, const mpq_class& lo, const mpq_class& hi,
                                        const mpq_class& step) {
    if (step <= 0) throw std::domain_error("step must be positive");
    std::vector<CurveSample> out;
    for (mpq_class x = lo; x <= hi; x += step) {
        mpq_class xx = x;
        xx.canonicalize();
        out.push_back({xx, r_rational(xx, m)});
    }
    return out;
}

std::optional<ContinuedFraction> invert_r_m(const mpq_class& target, int m, int max_len,
                                            int max_part) {
    if (max_len < 1 || max_part < 1) return std::nullopt;
    std::vector<BigMatrix> lambda;
    lambda.reserve(static_cast<std::size_t>(max_part));
    for (int a = 1; a <= max_part; ++a) lambda.push_back(lambda_matrix(a, m));

    std::vector<int> word;
    std::optional<ContinuedFraction> found;
    auto dfs = [&](auto&& self, const BigMatrix& prod, int depth, int len) -> bool {
        if (depth == len) {
            mpq_class v = column_ratio(prod, 0, 0, m);
            if (v == target) {
                found = ContinuedFraction(word);
                return true;
            }
            return false;
        }
        for (int a = 1; a <= max_part; ++a) {
            BigMatrix next = prod * lambda[static_cast<std::size_t>(a - 1)];
            // All extensions of this prefix (including the prefix itself)
            // take values inside the column hull of its product.
            ColumnHull h = column_hull(next, 0, m);
            if (target < h.lo || (h.bounded && target > h.hi)) continue;
            word.push_back(a);
            if (self(self, next, depth + 1, len)) return true;
            word.pop_back();
        }
        return false;
    };
    for (int len = 1; len <= max_len && !found; ++len)
        dfs(dfs, BigMatrix::identity(m + 1), 0, len);
    return found;
}

}  // namespace snakes
