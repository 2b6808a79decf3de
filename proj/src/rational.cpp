#include "ndg/rational.hpp"

#include <cctype>
#include <ostream>

#include "ndg/errors.hpp"

namespace ndg {

Rational::Rational(long num, long den) {
    if (den == 0) throw bad_parameter("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw bad_parameter("rational division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& s) {
    std::string t = s;
    // trim surrounding whitespace, nothing fancier
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (t.empty()) throw bad_input("empty rational literal");

    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
        neg = (t[0] == '-');
        t.erase(t.begin());
    }
    std::string num = t, den = "1";
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        num = t.substr(0, slash);
        den = t.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw bad_input("malformed rational literal '" + s + "' (expected p or p/q)");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw bad_input("rational literal '" + s + "' has zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::numerator() const { return v_.get_num().get_str(); }
std::string Rational::denominator() const { return v_.get_den().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace ndg
