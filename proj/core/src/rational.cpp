#include "grosstm/rational.hpp"

#include "grosstm/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace grosstm {

namespace {
constexpr unsigned long kExponentCap = 1ul << 24;
}

BigInt int_pow(const BigInt& base, const BigInt& exp) {
    if (exp < 0) {
        throw UnsupportedExponent("int_pow requires a non-negative exponent");
    }
    if (exp > kExponentCap) {
        throw UnsupportedExponent("integer exponent too large for exact expansion");
    }
    return boost::multiprecision::pow(base, exp.convert_to<unsigned long>());
}

Rational rational_pow(const Rational& base, const BigInt& exp) {
    if (exp == 0) {
        return Rational(1);
    }
    if (exp < 0) {
        if (base == 0) {
            throw DivisionByZero();
        }
        Rational positive = rational_pow(base, -exp);
        return Rational(1) / positive;
    }
    BigInt n = int_pow(numerator(base), exp);
    BigInt d = int_pow(denominator(base), exp);
    return Rational(n, d);
}

BigInt floor_nth_root(const BigInt& x, unsigned long n) {
    if (x < 0 || n == 0) {
        throw Error("floor_nth_root requires x >= 0 and n >= 1");
    }
    if (n == 1 || x == 0 || x == 1) {
        return x;
    }
    // Binary search seeded from the bit length.
    unsigned long bits = boost::multiprecision::msb(x) + 1;
    BigInt hi = BigInt(1) << (bits / n + 1);
    BigInt lo = 0;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(n)) <= x) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

std::optional<BigInt> exact_nth_root(const BigInt& x, unsigned long n) {
    BigInt r = floor_nth_root(x, n);
    if (boost::multiprecision::pow(r, static_cast<unsigned>(n)) == x) {
        return r;
    }
    return std::nullopt;
}

std::optional<Rational> exact_rational_pow(const Rational& base, const Rational& exp) {
    if (base <= 0) {
        throw Error("exact_rational_pow requires a positive base");
    }
    BigInt p = numerator(exp);
    BigInt q = denominator(exp);  // q >= 1, gcd(p, q) == 1
    Rational powered = rational_pow(base, p);
    if (q == 1) {
        return powered;
    }
    if (q > kExponentCap) {
        throw UnsupportedExponent("root degree too large");
    }
    auto n = exact_nth_root(numerator(powered), q.convert_to<unsigned long>());
    if (!n) {
        return std::nullopt;
    }
    auto d = exact_nth_root(denominator(powered), q.convert_to<unsigned long>());
    if (!d) {
        return std::nullopt;
    }
    return Rational(*n, *d);
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace grosstm
