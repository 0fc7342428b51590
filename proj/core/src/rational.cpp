#include "lefschetz/rational.hpp"

#include "lefschetz/errors.hpp"

#include <cctype>

namespace lefschetz {

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw ParseError("bad rational literal \"" + std::string(text) + "\"");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer p(n, 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return Rational(r);
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace lefschetz
