#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace snakes {

/// Dense integer-coefficient polynomial in q; canonical form has a nonzero
/// trailing (leading-degree) coefficient. The zero polynomial is empty.
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<mpz_class> coeffs);
    static QPolynomial one();
    static QPolynomial monomial(const mpz_class& c, std::size_t deg);

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    mpz_class coeff(std::size_t k) const;

    mpz_class at_one() const;
    bool palindromic() const;
    bool nonnegative() const;
    /// Coefficients rise (weakly) then fall (weakly).
    bool unimodal() const;

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

  private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Gaussian q-binomial [n k]_q; zero polynomial when k < 0 or k > n.
QPolynomial q_binomial(int n, int k);

/// Power-series expansion of num(x)/den(x) to x^order inclusive; den must
/// have a unit constant term.
std::vector<mpz_class> rational_series(const std::vector<mpz_class>& num,
                                       const std::vector<mpz_class>& den,
                                       std::size_t order);

}  // namespace snakes
