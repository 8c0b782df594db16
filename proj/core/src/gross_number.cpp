#include "grosstm/gross_number.hpp"

#include "grosstm/errors.hpp"

#include <algorithm>
#include <utility>

namespace grosstm {

namespace {

constexpr int kLongDivisionCap = 64;

void check_monomial(const Monomial& m) {
    if (m.base < 1) {
        throw UnsupportedResult("monomial base below 1 is unrepresentable");
    }
    if (m.gexp.r < 0) {
        throw UnsupportedResult("negative infinite exponent part is unrepresentable");
    }
}

Monomial mul_monomial(const Monomial& a, const Monomial& b) {
    return Monomial{a.coeff * b.coeff, a.base * b.base,
                    GrossExponent{a.gexp.r + b.gexp.r, a.gexp.f + b.gexp.f}};
}

Monomial div_monomial(const Monomial& a, const Monomial& b) {
    Monomial q{a.coeff / b.coeff, a.base / b.base,
               GrossExponent{a.gexp.r - b.gexp.r, a.gexp.f - b.gexp.f}};
    if (q.base < 1) {
        throw UnsupportedResult("quotient would need a base below 1");
    }
    if (q.gexp.r < 0) {
        throw UnsupportedResult("quotient would need a negative infinite exponent part");
    }
    return q;
}

bool is_grossone(const GrossNumber& x) {
    if (x.terms().size() != 1) {
        return false;
    }
    const Monomial& m = x.terms().front();
    return m.coeff == 1 && m.base == 1 && m.gexp == GrossExponent{0, 1};
}

// Splits exp into R*G + F when that shape covers every term.
std::optional<std::pair<Rational, Rational>> linear_exponent(const GrossNumber& exp) {
    Rational big;
    Rational fin;
    for (const Monomial& t : exp.terms()) {
        if (t.base != 1 || t.gexp.r != 0) {
            return std::nullopt;
        }
        if (t.gexp.f == 1) {
            big = t.coeff;
        } else if (t.gexp.f == 0) {
            fin = t.coeff;
        } else {
            return std::nullopt;
        }
    }
    return std::make_pair(big, fin);
}

}  // namespace

int compare_magnitude(const Monomial& a, const Monomial& b) {
    if (a.gexp.r != b.gexp.r) {
        return a.gexp.r < b.gexp.r ? -1 : 1;
    }
    if (a.base != b.base) {
        return a.base < b.base ? -1 : 1;
    }
    if (a.gexp.f != b.gexp.f) {
        return a.gexp.f < b.gexp.f ? -1 : 1;
    }
    return 0;
}

GrossNumber::GrossNumber(long value) : GrossNumber(Rational(value)) {}

GrossNumber::GrossNumber(const Rational& value) {
    if (value != 0) {
        terms_.push_back(Monomial{value, 1, GrossExponent{0, 0}});
    }
}

GrossNumber GrossNumber::grossone() {
    return from_monomial(Monomial{1, 1, GrossExponent{0, 1}});
}

GrossNumber GrossNumber::from_monomial(const Monomial& m) {
    return from_terms({m});
}

GrossNumber GrossNumber::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
        return compare_magnitude(a, b) > 0;
    });
    GrossNumber out;
    for (Monomial& t : terms) {
        if (t.coeff == 0) {
            continue;
        }
        check_monomial(t);
        if (!out.terms_.empty() && compare_magnitude(out.terms_.back(), t) == 0) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0) {
                out.terms_.pop_back();
            }
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

std::optional<Rational> GrossNumber::as_rational() const {
    if (terms_.empty()) {
        return Rational(0);
    }
    if (terms_.size() == 1 && terms_.front().base == 1 &&
        terms_.front().gexp == GrossExponent{0, 0}) {
        return terms_.front().coeff;
    }
    return std::nullopt;
}

std::optional<BigInt> GrossNumber::as_integer() const {
    auto q = as_rational();
    if (q && is_integer(*q)) {
        return numerator(*q);
    }
    return std::nullopt;
}

GrossNumber add(const GrossNumber& a, const GrossNumber& b) {
    std::vector<Monomial> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return GrossNumber::from_terms(std::move(terms));
}

GrossNumber negate(const GrossNumber& a) {
    std::vector<Monomial> terms = a.terms();
    for (Monomial& t : terms) {
        t.coeff = -t.coeff;
    }
    return GrossNumber::from_terms(std::move(terms));
}

GrossNumber sub(const GrossNumber& a, const GrossNumber& b) {
    return add(a, negate(b));
}

GrossNumber mul(const GrossNumber& a, const GrossNumber& b) {
    std::vector<Monomial> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const Monomial& x : a.terms()) {
        for (const Monomial& y : b.terms()) {
            terms.push_back(mul_monomial(x, y));
        }
    }
    return GrossNumber::from_terms(std::move(terms));
}

GrossNumber div(const GrossNumber& a, const GrossNumber& b) {
    if (b.is_zero()) {
        throw DivisionByZero();
    }
    if (b.terms().size() == 1) {
        const Monomial& d = b.terms().front();
        std::vector<Monomial> terms;
        terms.reserve(a.terms().size());
        for (const Monomial& t : a.terms()) {
            terms.push_back(div_monomial(t, d));
        }
        return GrossNumber::from_terms(std::move(terms));
    }
    GrossNumber quotient;
    GrossNumber remainder = a;
    for (int i = 0; i < kLongDivisionCap; ++i) {
        if (remainder.is_zero()) {
            return quotient;
        }
        GrossNumber step =
            GrossNumber::from_monomial(div_monomial(remainder.terms().front(), b.terms().front()));
        quotient = add(quotient, step);
        remainder = sub(remainder, mul(step, b));
    }
    if (remainder.is_zero()) {
        return quotient;
    }
    throw UnsupportedResult("long division did not reach a zero remainder");
}

GrossNumber pow(const GrossNumber& base, const GrossNumber& exp) {
    // Non-negative finite integer exponent: repeated multiplication.
    if (auto n = exp.as_integer(); n && *n >= 0) {
        if (*n == 0) {
            if (base.is_zero()) {
                throw UnsupportedExponent("0^0 is undefined");
            }
            return GrossNumber(1);
        }
        if (*n > (BigInt(1) << 24)) {
            throw UnsupportedExponent("integer exponent too large for exact expansion");
        }
        GrossNumber acc(1);
        GrossNumber sq = base;
        BigInt k = *n;
        while (k > 0) {
            if ((k & 1) != 0) {
                acc = mul(acc, sq);
            }
            k >>= 1;
            if (k > 0) {
                sq = mul(sq, sq);
            }
        }
        return acc;
    }

    auto rational_base = base.as_rational();
    if (rational_base && (*rational_base == 0 || *rational_base == 1)) {
        if (compare(exp, GrossNumber(0)) != Ordering::greater) {
            throw UnsupportedExponent("base 0 or 1 requires a positive exponent");
        }
        return *rational_base == 0 ? GrossNumber(0) : GrossNumber(1);
    }

    auto linear = linear_exponent(exp);
    if (!linear) {
        throw UnsupportedExponent("exponent is not of the form n*G + f");
    }
    const auto& [big, fin] = *linear;

    if (is_grossone(base)) {
        if (big < 0) {
            throw UnsupportedExponent("negative infinite exponent part");
        }
        return GrossNumber::from_monomial(Monomial{1, 1, GrossExponent{big, fin}});
    }

    if (rational_base) {
        const Rational& b = *rational_base;
        if (b <= 1) {
            throw UnsupportedExponent("exponential base must exceed 1");
        }
        if (!is_integer(big) || big < 0) {
            throw UnsupportedExponent("G coefficient of the exponent must be a non-negative integer");
        }
        auto coeff = exact_rational_pow(b, fin);
        if (!coeff) {
            throw UnsupportedExponent("finite part of the exponent yields an irrational value");
        }
        Rational new_base = rational_pow(b, numerator(big));
        return GrossNumber::from_monomial(Monomial{*coeff, new_base, GrossExponent{0, 0}});
    }

    throw UnsupportedExponent("unsupported base/exponent shape");
}

Ordering compare(const GrossNumber& a, const GrossNumber& b) {
    GrossNumber diff = sub(a, b);
    if (diff.is_zero()) {
        return Ordering::equal;
    }
    return diff.terms().front().coeff > 0 ? Ordering::greater : Ordering::less;
}

Decomposition classify(const GrossNumber& a) {
    const Monomial unit{1, 1, GrossExponent{0, 0}};
    std::vector<Monomial> infinite, finite, small;
    for (const Monomial& t : a.terms()) {
        int c = compare_magnitude(t, unit);
        (c > 0 ? infinite : c == 0 ? finite : small).push_back(t);
    }
    Decomposition d;
    d.infinite_part = GrossNumber::from_terms(std::move(infinite));
    d.finite_part = GrossNumber::from_terms(std::move(finite));
    d.infinitesimal_part = GrossNumber::from_terms(std::move(small));
    if (a.is_zero()) {
        d.kind = NumberClass::zero;
    } else if (!d.infinite_part.is_zero()) {
        d.kind = NumberClass::infinite;
    } else if (!d.finite_part.is_zero()) {
        d.kind = NumberClass::finite;
    } else {
        d.kind = NumberClass::infinitesimal;
    }
    return d;
}

namespace {

std::string format_exponent(const GrossExponent& q) {
    if (q.r == 0) {
        return to_string(q.f);
    }
    if (q.r == 1 && q.f == 0) {
        return "G";
    }
    GrossNumber value = GrossNumber::from_terms(
        {Monomial{q.r, 1, GrossExponent{0, 1}}, Monomial{q.f, 1, GrossExponent{0, 0}}});
    return "(" + format_gross_compact(value) + ")";
}

// Magnitude only; the sign is emitted by the term joiner.
std::string format_monomial(const Monomial& m) {
    Rational c = boost::multiprecision::abs(m.coeff);
    std::string out;
    if (c != 1) {
        out = to_string(c);
    }
    if (m.base != 1) {
        if (!out.empty()) {
            out += '*';
        }
        out += to_string(m.base) + "^G";
    }
    if (!(m.gexp == GrossExponent{0, 0})) {
        if (!out.empty()) {
            out += '*';
        }
        out += 'G';
        if (!(m.gexp == GrossExponent{0, 1})) {
            out += '^' + format_exponent(m.gexp);
        }
    }
    if (out.empty()) {
        out = to_string(c);
    }
    return out;
}

std::string format_terms(const GrossNumber& a, const char* plus, const char* minus,
                         const char* leading_minus) {
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const Monomial& t : a.terms()) {
        if (first) {
            if (t.coeff < 0) {
                out += leading_minus;
            }
            first = false;
        } else {
            out += t.coeff < 0 ? minus : plus;
        }
        out += format_monomial(t);
    }
    return out;
}

}  // namespace

std::string format_gross(const GrossNumber& a) {
    return format_terms(a, " + ", " - ", "-");
}

std::string format_gross_compact(const GrossNumber& a) {
    return format_terms(a, "+", "-", "-");
}

}  // namespace grosstm
