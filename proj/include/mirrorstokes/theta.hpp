#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "mirrorstokes/rational.hpp"

namespace mirrorstokes {

/// Laurent polynomial in one variable over the rationals. Zero coefficients
/// are never stored. Used both for the theta-variable entries of connection
/// matrices and (under the LaurentPoly alias) for potentials in x.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c) { set(0, c); }  // NOLINT: constant embedding
    Laurent(long c) { set(0, Rational(c)); }   // NOLINT

    static Laurent monomial(int exponent, const Rational& c = Rational(1)) {
        Laurent l;
        l.set(exponent, c);
        return l;
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Minimal exponent; only meaningful for nonzero values.
    int ord() const;
    /// Maximal exponent; only meaningful for nonzero values.
    int deg() const;
    Rational at(int exponent) const;
    void set(int exponent, const Rational& c);
    const std::map<int, Rational>& coefficients() const { return coeffs_; }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent scaled(const Rational& c) const;
    Laurent shifted(int k) const;  // multiply by var^k
    /// Derivation t*d/dt: maps t^k to k*t^k.
    Laurent theta_derivative() const;
    /// Ordinary derivative d/dx: maps x^k to k*x^(k-1).
    Laurent derivative() const;
    /// Substitute var -> -var (flips sign of odd coefficients).
    Laurent flipped_sign() const;

    /// Exact division; throws std::domain_error when the division is not exact.
    Laurent divide_exact(const Laurent& divisor) const;

    std::complex<double> eval(std::complex<double> x) const;

    /// Text form like "x + x^-3" or "-256/27*t^-4"; exponents descending.
    std::string str(const std::string& var) const;

    bool is_canonical() const;

private:
    std::map<int, Rational> coeffs_;
};

/// Monic gcd of two Laurent values viewed as polynomials after factoring out
/// their monomial content. Returns 1 for coprime inputs; result has ord 0.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

/// Reduced fraction of Laurent values. Canonical form: denominator is a monic
/// polynomial with nonzero constant term (all monomial content absorbed into
/// the numerator), and numerator/denominator share no polynomial factor.
struct LaurentFraction {
    Laurent num;
    Laurent den{Rational(1)};

    LaurentFraction() = default;
    LaurentFraction(Laurent n, Laurent d);

    bool is_laurent() const { return den == Laurent(Rational(1)); }
    bool is_zero() const { return num.is_zero(); }

    LaurentFraction operator-() const;
    friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b);
    friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b);
    friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b);
    friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b);
    friend bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
        return a.num == b.num && a.den == b.den;
    }
};

/// Dense matrix with Laurent entries.
class ThetaMatrix {
public:
    ThetaMatrix() = default;
    ThetaMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static ThetaMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Laurent& at(int r, int c) { return e_[r * cols_ + c]; }
    const Laurent& at(int r, int c) const { return e_[r * cols_ + c]; }

    ThetaMatrix operator*(const ThetaMatrix& o) const;
    ThetaMatrix operator+(const ThetaMatrix& o) const;
    ThetaMatrix operator-(const ThetaMatrix& o) const;
    std::vector<Laurent> apply(const std::vector<Laurent>& v) const;
    bool is_zero() const;
    friend bool operator==(const ThetaMatrix& a, const ThetaMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Laurent> e_;
};

/// Solves A x = y exactly by fraction-free (Bareiss) elimination over the
/// Laurent ring, with back substitution in the fraction field. Throws
/// SingularSystem when det A = 0.
std::vector<LaurentFraction> fraction_free_solve(const ThetaMatrix& A,
                                                 const std::vector<Laurent>& y);

using ThetaLaurent = Laurent;

}  // namespace mirrorstokes
