#include "leibniz/rational.hpp"

#include <cctype>

namespace leibniz {

Rational rat(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// GMP's string constructor rejects a leading '+'.
std::string strip_plus(const std::string& s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_literal(num)) return std::nullopt;
    mpz_class n(strip_plus(num));
    mpz_class d(1);
    if (slash != std::string::npos) {
        const std::string den = text.substr(slash + 1);
        if (!is_integer_literal(den)) return std::nullopt;
        d = mpz_class(strip_plus(den));
        if (d == 0) return std::nullopt;
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Rational RationalSampler::next() {
    const long num = next_int(-9, 9);
    long den = next_int(-9, 8);
    if (den >= 0) ++den;  // skip zero, keep the distribution uniform
    return rat(num, den);
}

Rational RationalSampler::next_nonzero() {
    for (;;) {
        Rational q = next();
        if (q != 0) return q;
    }
}

long RationalSampler::next_int(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(m_engine);
}

}  // namespace leibniz
