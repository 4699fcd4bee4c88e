#include "grcone/numeric.hpp"

#include "grcone/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <utility>

namespace grcone {

Rational make_rational(Int num, Int den) {
    if (den == 0) {
        throw ValidationError("rational number with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

Int as_integer(const Rational& q) {
    if (!is_integral(q)) {
        throw Error("expected an integral rational, got " + format_rational(q));
    }
    return numerator(q);
}

std::string format_rational(const Rational& q) { return q.str(); }

Int parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw ParseError("expected an integer, got \"" + std::string(text) + "\"");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw ParseError("expected an integer, got \"" + std::string(text) + "\"");
        }
    }
    return Int(std::string(text));
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Int num = parse_integer(text.substr(0, slash));
    Int den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw ValidationError("rational with zero denominator: \"" + std::string(text) + "\"");
    }
    return make_rational(std::move(num), std::move(den));
}

bool is_prime(const Int& n) {
    if (n < 2) {
        return false;
    }
    return boost::multiprecision::miller_rabin_test(n, 25);
}

Int pow_int(const Int& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

} // namespace grcone
