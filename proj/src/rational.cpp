#include "hcover/rational.hpp"

#include <cctype>
#include <cmath>

#include "hcover/errors.hpp"

namespace hcover {

Tolerances tolerances(Arith mode) {
    if (mode == Arith::exact) {
        return {Rational(0), Rational(0)};
    }
    return {make_rational(1, 1000000000), make_rational(1, 10000000)};
}

Rational make_rational(long num, long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ValidationError("number is not finite");
    return Rational(x); // exact binary expansion
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& token) {
    std::string s = token;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    if (s.empty()) throw ValidationError("bad number '" + token + "'");

    Rational value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ValidationError("bad number '" + token + "'");
        }
        mpz_class d(den, 10);
        if (d == 0) throw ValidationError("zero denominator in '" + token + "'");
        value = Rational(mpz_class(num, 10), d);
        value.canonicalize();
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw ValidationError("bad number '" + token + "'");
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
            throw ValidationError("bad number '" + token + "'");
        }
        mpz_class scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(ip, 10);
        mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(fp, 10);
        value = Rational(whole * scale + frac, scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw ValidationError("bad number '" + token + "'");
        value = Rational(mpz_class(s, 10));
    }
    if (negative) value = -value;
    return value;
}

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rational_double(const Rational& q) {
    return q.get_d();
}

} // namespace hcover
