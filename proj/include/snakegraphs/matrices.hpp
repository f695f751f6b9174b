#pragma once

#include <vector>

#include <gmpxx.h>

#include "snakegraphs/cf.hpp"

namespace snakes {

/// Multichoose ((a multichoose k)) = C(a+k-1, k); 1 for k == 0, 0 for k < 0.
mpz_class multichoose(int a, long k);

/// Dense square matrix of arbitrary-precision integers, row-major.
class BigMatrix {
  public:
    explicit BigMatrix(int size);
    static BigMatrix identity(int size);

    int size() const { return size_; }
    mpz_class& at(int i, int j) { return data_[i * size_ + j]; }
    const mpz_class& at(int i, int j) const { return data_[i * size_ + j]; }

    BigMatrix operator*(const BigMatrix& o) const;
    BigMatrix transpose() const;
    BigMatrix pow(unsigned long e) const;  // binary exponentiation

    bool operator==(const BigMatrix& o) const {
        return size_ == o.size_ && data_ == o.data_;
    }

  private:
    int size_;
    std::vector<mpz_class> data_;
};

/// The (m+1)x(m+1) matrix with (i,j)-entry ((a multichoose m+2-i-j))
/// (1-based); symmetric, anti-triangular with 1s on the anti-diagonal.
BigMatrix lambda_matrix(int a, int m);

/// Product Lambda^m(a_1) ... Lambda^m(a_n); its top-left entry counts the
/// m-dimer covers of the snake graph of cf.
BigMatrix lambda_product(const ContinuedFraction& cf, int m);

/// Unipotent generators of SL_{m+1}(Z) with all-ones triangles, and the
/// reversal permutation matrix W.
BigMatrix r_power(int a, int m);  // (R^a)_{i,i+k} = ((a multichoose k))
BigMatrix l_power(int a, int m);
BigMatrix w_matrix(int m);

/// Same product as lambda_product, computed through the word
/// R^{a_1} L^{a_2} R^{a_3} ... (with a trailing W when n is odd).
BigMatrix lr_word_product(const ContinuedFraction& cf, int m);

/// Coefficients of det(X - t*I) for a 3x3 matrix, returned monic:
/// p(t) = t^3 + c[2] t^2 + c[1] t + c[0].
std::vector<mpz_class> char_poly_3x3(const BigMatrix& x);

}  // namespace snakes
