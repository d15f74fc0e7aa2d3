#include "bezout/rational.hpp"

namespace bezout {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    return Rational(num, den);
}

Rational rat(long long num, long long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

std::string rational_str(const Rational& q) {
    return q.str();
}

Integer factorial(int n) {
    if (n < 0)
        throw DomainError("factorial of negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

Integer falling(int n, int k) {
    Integer r = 1;
    for (int i = 0; i < k; ++i)
        r *= (n - i);
    return r;
}

} // namespace bezout
