#include "snakegraphs/qpoly.hpp"

#include <stdexcept>

namespace snakes {

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

QPolynomial QPolynomial::one() { return QPolynomial({1}); }

QPolynomial QPolynomial::monomial(const mpz_class& c, std::size_t deg) {
    std::vector<mpz_class> v(deg + 1);
    v[deg] = c;
    return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class QPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : mpz_class(0);
}

mpz_class QPolynomial::at_one() const {
    mpz_class s;
    for (const auto& c : coeffs_) s += c;
    return s;
}

bool QPolynomial::palindromic() const {
    for (std::size_t i = 0; i < coeffs_.size() / 2; ++i)
        if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
    return true;
}

bool QPolynomial::nonnegative() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

bool QPolynomial::unimodal() const {
    std::size_t i = 1;
    while (i < coeffs_.size() && coeffs_[i] >= coeffs_[i - 1]) ++i;
    while (i < coeffs_.size() && coeffs_[i] <= coeffs_[i - 1]) ++i;
    return i >= coeffs_.size();
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPolynomial(std::move(out));
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!out.empty()) out += coeffs_[k] > 0 ? " + " : " - ";
        else if (coeffs_[k] < 0) out += "-";
        mpz_class a = abs(coeffs_[k]);
        if (a != 1 || k == 0) out += a.get_str();
        if (k >= 1) {
            out += "q";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

QPolynomial q_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, rolled up one row at a time.
    std::vector<QPolynomial> row(static_cast<std::size_t>(n) + 1);
    row[0] = QPolynomial::one();
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                QPolynomial::monomial(1, static_cast<std::size_t>(j)) * row[static_cast<std::size_t>(j)];
    return row[static_cast<std::size_t>(k)];
}

std::vector<mpz_class> rational_series(const std::vector<mpz_class>& num,
                                       const std::vector<mpz_class>& den,
                                       std::size_t order) {
    if (den.empty() || (den[0] != 1 && den[0] != -1))
        throw std::invalid_argument("denominator needs a unit constant term");
    std::vector<mpz_class> out(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        mpz_class acc = k < num.size() ? num[k] : mpz_class(0);
        for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * out[k - j];
        out[k] = acc / den[0];
    }
    return out;
}

}  // namespace snakes
