#include "snakegraphs/cf.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace snakes {

ContinuedFraction::ContinuedFraction(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("continued fraction needs at least one part");
    for (int a : parts_)
        if (a < 1) throw std::invalid_argument("continued fraction parts must be >= 1");
}

ContinuedFraction ContinuedFraction::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return ContinuedFraction(std::move(parts));
}

int ContinuedFraction::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

ContinuedFraction ContinuedFraction::tail() const {
    return ContinuedFraction(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string ContinuedFraction::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

SignSequence cf_to_sign_sequence(const ContinuedFraction& cf) {
    SignSequence seq;
    char sign = '-';
    int pos = 0;
    for (int a : cf.parts()) {
        seq.signs.append(static_cast<std::size_t>(a), sign);
        pos += a;
        seq.block_ends.push_back(pos);
        sign = (sign == '-') ? '+' : '-';
    }
    return seq;
}

ContinuedFraction dual_cf(const ContinuedFraction& cf) {
    // Expand each part into a_i ones joined by '+', join parts by ',',
    // then swap the two separators and read the parts back off.
    std::string word;
    for (std::size_t i = 0; i < cf.length(); ++i) {
        if (i) word += ',';
        for (int k = 0; k < cf.part(i); ++k) {
            if (k) word += '+';
            word += '1';
        }
    }
    for (char& c : word) {
        if (c == '+') c = ',';
        else if (c == ',') c = '+';
    }
    std::vector<int> parts;
    int run = 0;
    for (char c : word) {
        if (c == '1') ++run;
        else if (c == ',') { parts.push_back(run); run = 0; }
    }
    parts.push_back(run);
    return ContinuedFraction(std::move(parts));
}

mpq_class cf_value(const ContinuedFraction& cf) {
    // Back-substitution; equivalent to the 2x2 matrix product.
    mpq_class value = cf.parts().back();
    for (auto it = cf.parts().rbegin() + 1; it != cf.parts().rend(); ++it)
        value = *it + 1 / value;
    value.canonicalize();
    return value;
}

CfExpansion real_to_cf(const mpq_class& x, std::size_t max_terms) {
    if (x < 1) throw std::domain_error("real_to_cf requires x >= 1");
    CfExpansion out;
    mpz_class p = x.get_num(), q = x.get_den();
    while (q != 0 && out.parts.size() < max_terms) {
        mpz_class a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        out.parts.push_back(static_cast<int>(a.get_si()));
        p = q;
        q = r;
    }
    // The Euclidean expansion of p/q > 1 ends in a part >= 2, giving the
    // canonical representation that does not end in 1 (unless x == 1).
    out.exact = (q == 0);
    return out;
}

CfExpansion real_to_cf(double x, std::size_t max_terms) {
    if (x < 1) throw std::domain_error("real_to_cf requires x >= 1");
    CfExpansion out;
    long double v = x;
    // Absolute uncertainty of v, magnified by each reciprocal step.
    long double spread = 2 * std::numeric_limits<double>::epsilon() * x;
    while (out.parts.size() < max_terms) {
        long double a = std::floor(v);
        long double frac = v - a;
        if (frac >= 1 - 2 * spread && frac != 0) {  // floor itself is unreliable
            out.precision_exhausted = true;
            break;
        }
        out.parts.push_back(static_cast<int>(a));
        if (frac == 0) {
            out.exact = true;
            break;
        }
        if (frac <= 2 * spread) {  // cannot tell the remainder from noise
            out.precision_exhausted = true;
            break;
        }
        // 1/(v - a) has relative error spread/frac, absolute error spread/frac^2.
        spread = spread / (frac * frac) + std::numeric_limits<long double>::epsilon() / frac;
        v = 1.0L / frac;
        if (spread >= 0.5L) {  // next partial quotient would be unreliable
            out.precision_exhausted = true;
            break;
        }
    }
    return out;
}

}  // namespace snakes
