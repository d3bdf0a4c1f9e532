#include "mirrorstokes/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace mirrorstokes {

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::is_canonical() const {
    if (v_.get_den() <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return g == 1 || (v_.get_num() == 0 && v_.get_den() == 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mirrorstokes
