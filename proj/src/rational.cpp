#include "opoly/rational.hpp"

#include <stdexcept>

namespace opoly {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

static bool valid_integer(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(p) || !valid_integer(q) || q[0] == '-' || q[0] == '+')
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (p[0] == '+') p.erase(0, 1);
    mpz_class zp(p, 10), zq(q, 10);
    if (zq == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    mpq_class r(zp, zq);
    r.canonicalize();
    return Rational(r);
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::optional<Rational> Rational::sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = q_.get_num(), d = q_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

}  // namespace opoly
