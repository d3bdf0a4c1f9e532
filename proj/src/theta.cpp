#include "mirrorstokes/theta.hpp"

#include <sstream>
#include <stdexcept>

#include "mirrorstokes/errors.hpp"

namespace mirrorstokes {

int Laurent::ord() const {
    if (is_zero()) throw std::domain_error("ord of zero Laurent value");
    return coeffs_.begin()->first;
}

int Laurent::deg() const {
    if (is_zero()) throw std::domain_error("deg of zero Laurent value");
    return coeffs_.rbegin()->first;
}

Rational Laurent::at(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void Laurent::set(int exponent, const Rational& c) {
    if (c.is_zero())
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = c;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [k, c] : o.coeffs_) set(k, at(k) + c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [k, c] : o.coeffs_) set(k, at(k) - c);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) r.set(ka + kb, r.at(ka + kb) + ca * cb);
    return r;
}

Laurent Laurent::scaled(const Rational& c) const {
    Laurent r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e + k, v);
    return r;
}

Laurent Laurent::theta_derivative() const {
    Laurent r;
    for (const auto& [k, v] : coeffs_)
        if (k != 0) r.coeffs_.emplace(k, v * Rational(k));
    return r;
}

Laurent Laurent::derivative() const {
    Laurent r;
    for (const auto& [k, v] : coeffs_)
        if (k != 0) r.coeffs_.emplace(k - 1, v * Rational(k));
    return r;
}

Laurent Laurent::flipped_sign() const {
    Laurent r;
    for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, (k % 2 == 0) ? v : -v);
    return r;
}

Laurent Laurent::divide_exact(const Laurent& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero Laurent value");
    if (is_zero()) return {};
    // Long division on the polynomial parts; the monomial shift is a unit.
    Laurent rem = shifted(-ord());
    Laurent div = divisor.shifted(-divisor.ord());
    Laurent quot;
    const int dd = div.deg();
    const Rational lead = div.at(dd);
    while (!rem.is_zero() && rem.deg() >= dd) {
        const int k = rem.deg() - dd;
        const Rational c = rem.at(rem.deg()) / lead;
        quot.set(k, c);
        rem -= div.shifted(k).scaled(c);
    }
    if (!rem.is_zero()) throw std::domain_error("inexact Laurent division");
    return quot.shifted(ord() - divisor.ord());
}

std::complex<double> Laurent::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (const auto& [k, v] : coeffs_) acc += v.to_double() * std::pow(x, k);
    return acc;
}

std::string Laurent::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [k, c] = *it;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << var;
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

bool Laurent::is_canonical() const {
    for (const auto& [k, c] : coeffs_)
        if (c.is_zero() || !c.is_canonical()) return false;
    return true;
}

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return Laurent(Rational(1));
    auto make_monic_poly = [](const Laurent& p) {
        Laurent q = p.shifted(-p.ord());
        return q.scaled(q.at(q.deg()).inverse());
    };
    if (a.is_zero()) return make_monic_poly(b);
    if (b.is_zero()) return make_monic_poly(a);
    Laurent p = make_monic_poly(a), q = make_monic_poly(b);
    while (!q.is_zero()) {
        // remainder of p by q over Q[t]
        Laurent rem = p;
        const int dq = q.deg();
        while (!rem.is_zero() && rem.deg() >= dq) {
            const int k = rem.deg() - dq;
            const Rational c = rem.at(rem.deg());  // q is monic
            rem -= q.shifted(k).scaled(c);
        }
        p = q;
        if (rem.is_zero()) {
            q = Laurent{};
        } else {
            rem = rem.shifted(-rem.ord());
            q = rem.scaled(rem.at(rem.deg()).inverse());
        }
    }
    return p;
}

LaurentFraction::LaurentFraction(Laurent n, Laurent d) {
    if (d.is_zero()) throw std::domain_error("zero denominator in Laurent fraction");
    if (n.is_zero()) {
        num = Laurent{};
        den = Laurent(Rational(1));
        return;
    }
    // Absorb all monomial content of the denominator into the numerator,
    // cancel the polynomial gcd, and make the denominator monic.
    const int shift = -d.ord();
    Laurent dp = d.shifted(shift);
    Laurent np = n.shifted(shift);
    const Laurent g = laurent_gcd(np, dp);
    if (g.deg() > 0) {
        np = np.divide_exact(g);
        dp = dp.divide_exact(g);
    }
    const Rational lead = dp.at(dp.deg());
    num = np.scaled(lead.inverse());
    den = dp.scaled(lead.inverse());
    // den is now monic with nonzero constant term; push any residual monomial
    // factor of den into num (cannot happen after gcd, but keep the invariant).
    if (den.ord() != 0) {
        num = num.shifted(-den.ord());
        den = den.shifted(-den.ord());
    }
}

LaurentFraction LaurentFraction::operator-() const {
    LaurentFraction r;
    r.num = -num;
    r.den = den;
    return r;
}

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
    return LaurentFraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) {
    return LaurentFraction(a.num * b.den - b.num * a.den, a.den * b.den);
}

LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
    return LaurentFraction(a.num * b.num, a.den * b.den);
}

LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero Laurent fraction");
    return LaurentFraction(a.num * b.den, a.den * b.num);
}

ThetaMatrix ThetaMatrix::identity(int n) {
    ThetaMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Laurent(Rational(1));
    return m;
}

ThetaMatrix ThetaMatrix::operator*(const ThetaMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    ThetaMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

ThetaMatrix ThetaMatrix::operator+(const ThetaMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    ThetaMatrix r = *this;
    for (int i = 0; i < rows_ * cols_; ++i) r.e_[i] += o.e_[i];
    return r;
}

ThetaMatrix ThetaMatrix::operator-(const ThetaMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    ThetaMatrix r = *this;
    for (int i = 0; i < rows_ * cols_; ++i) r.e_[i] -= o.e_[i];
    return r;
}

std::vector<Laurent> ThetaMatrix::apply(const std::vector<Laurent>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector size mismatch");
    std::vector<Laurent> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool ThetaMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<LaurentFraction> fraction_free_solve(const ThetaMatrix& A,
                                                 const std::vector<Laurent>& y) {
    const int n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("fraction_free_solve needs a square matrix");
    if (static_cast<int>(y.size()) != n) throw std::invalid_argument("rhs size mismatch");

    // Augmented matrix [A | y], Bareiss elimination.
    ThetaMatrix M(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, n) = y[i];
    }
    Laurent prev(Rational(1));
    for (int k = 0; k < n; ++k) {
        if (M.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!M.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) throw SingularSystem("matrix is singular over the function field");
            // Row swaps keep the Bareiss divisions exact; the solution of the
            // augmented system is unaffected.
            for (int j = 0; j <= n; ++j) std::swap(M.at(k, j), M.at(swap_row, j));
        }
        if (k == n - 1) break;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= n; ++j)
                M.at(i, j) =
                    (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)).divide_exact(prev);
            M.at(i, k) = Laurent{};
        }
        prev = M.at(k, k);
    }
    if (M.at(n - 1, n - 1).is_zero())
        throw SingularSystem("matrix is singular over the function field");

    std::vector<LaurentFraction> x(n);
    for (int i = n - 1; i >= 0; --i) {
        LaurentFraction acc(M.at(i, n), Laurent(Rational(1)));
        for (int j = i + 1; j < n; ++j)
            acc = acc - LaurentFraction(M.at(i, j), Laurent(Rational(1))) * x[j];
        x[i] = acc / LaurentFraction(M.at(i, i), Laurent(Rational(1)));
    }
    return x;
}

}  // namespace mirrorstokes
