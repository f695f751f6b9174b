#include "snakegraphs/matrices.hpp"

#include <stdexcept>

namespace snakes {

mpz_class multichoose(int a, long k) {
    if (a < 1) throw std::domain_error("multichoose requires a >= 1");
    if (k < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a + k - 1),
                 static_cast<unsigned long>(k));
    return r;
}

BigMatrix::BigMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size) {}

BigMatrix BigMatrix::identity(int size) {
    BigMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& o) const {
    if (size_ != o.size_) throw std::invalid_argument("matrix size mismatch");
    BigMatrix out(size_);
    for (int i = 0; i < size_; ++i)
        for (int k = 0; k < size_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < size_; ++j) out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

BigMatrix BigMatrix::transpose() const {
    BigMatrix out(size_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) out.at(j, i) = at(i, j);
    return out;
}

BigMatrix BigMatrix::pow(unsigned long e) const {
    BigMatrix base = *this;
    BigMatrix acc = identity(size_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

BigMatrix lambda_matrix(int a, int m) {
    BigMatrix out(m + 1);
    for (int i = 1; i <= m + 1; ++i)
        for (int j = 1; j <= m + 1; ++j) out.at(i - 1, j - 1) = multichoose(a, m + 2 - i - j);
    return out;
}

BigMatrix lambda_product(const ContinuedFraction& cf, int m) {
    BigMatrix x = lambda_matrix(cf.part(0), m);
    for (std::size_t k = 1; k < cf.length(); ++k) x = x * lambda_matrix(cf.part(k), m);
    return x;
}

BigMatrix r_power(int a, int m) {
    BigMatrix out(m + 1);
    for (int i = 0; i <= m; ++i)
        for (int j = i; j <= m; ++j) out.at(i, j) = multichoose(a, j - i);
    return out;
}

BigMatrix l_power(int a, int m) { return r_power(a, m).transpose(); }

BigMatrix w_matrix(int m) {
    BigMatrix out(m + 1);
    for (int i = 0; i <= m; ++i) out.at(i, m - i) = 1;
    return out;
}

BigMatrix lr_word_product(const ContinuedFraction& cf, int m) {
    BigMatrix x = BigMatrix::identity(m + 1);
    for (std::size_t k = 0; k < cf.length(); ++k) {
        if (k % 2 == 0) x = x * r_power(cf.part(k), m);
        else x = x * l_power(cf.part(k), m);
    }
    if (cf.length() % 2 == 1) x = x * w_matrix(m);
    return x;
}

std::vector<mpz_class> char_poly_3x3(const BigMatrix& x) {
    if (x.size() != 3) throw std::invalid_argument("char_poly_3x3 needs a 3x3 matrix");
    mpz_class tr = x.at(0, 0) + x.at(1, 1) + x.at(2, 2);
    mpz_class m2 = x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0) +
                   x.at(0, 0) * x.at(2, 2) - x.at(0, 2) * x.at(2, 0) +
                   x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1);
    mpz_class det = x.at(0, 0) * (x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1)) -
                    x.at(0, 1) * (x.at(1, 0) * x.at(2, 2) - x.at(1, 2) * x.at(2, 0)) +
                    x.at(0, 2) * (x.at(1, 0) * x.at(2, 1) - x.at(1, 1) * x.at(2, 0));
    // det(X - tI) up to sign; monic form t^3 - tr t^2 + m2 t - det.
    return {-det, m2, -tr};
}

}  // namespace snakes
