#pragma once

#include "grosstm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grosstm {

// Exponent q = r*G + f applied to the infinite unit G. r >= 0 always; values
// with a negative infinite part are unrepresentable and rejected upstream.
struct GrossExponent {
    Rational r;
    Rational f;

    bool operator==(const GrossExponent&) const = default;
};

// One term coeff * base^G * G^(r*G + f), with coeff != 0 and base >= 1
// (base 1 meaning no exponential factor). The asymptotic size of a monomial
// is decided by the lexicographic magnitude key (r, base, f): the log of the
// magnitude is r*G*lnG + G*ln(base) + f*lnG + ln|coeff|, and each summand
// dominates the next.
struct Monomial {
    Rational coeff;
    Rational base = 1;
    GrossExponent gexp;

    bool operator==(const Monomial&) const = default;
};

// -1 / 0 / +1 comparison of magnitude keys.
int compare_magnitude(const Monomial& a, const Monomial& b);

enum class Ordering { less, equal, greater };
enum class NumberClass { zero, finite, infinitesimal, infinite };

// A normalized sum of monomials: terms sorted by strictly decreasing
// magnitude key, no two terms with equal keys, empty sum = 0. Values are
// immutable after construction and safe to share between threads.
class GrossNumber {
public:
    GrossNumber() = default;
    GrossNumber(long value);  // NOLINT: implicit by design, mirrors integer literals
    explicit GrossNumber(const Rational& value);

    static GrossNumber grossone();
    static GrossNumber from_monomial(const Monomial& m);
    static GrossNumber from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // The exact rational value, when the number is a pure finite rational
    // (zero or a single (r=0, base=1, f=0) term).
    std::optional<Rational> as_rational() const;
    std::optional<BigInt> as_integer() const;

    bool operator==(const GrossNumber&) const = default;

private:
    std::vector<Monomial> terms_;
};

GrossNumber add(const GrossNumber& a, const GrossNumber& b);
GrossNumber sub(const GrossNumber& a, const GrossNumber& b);
GrossNumber mul(const GrossNumber& a, const GrossNumber& b);
GrossNumber negate(const GrossNumber& a);

// Exact division. A single-monomial divisor divides termwise; a multi-term
// divisor goes through leading-term long division and succeeds only when the
// remainder reaches exactly zero within the iteration cap (64).
GrossNumber div(const GrossNumber& a, const GrossNumber& b);

// Supported shapes: any base with a non-negative finite integer exponent;
// base 0 or 1 with any positive exponent; finite rational base b > 1 with
// exponent n*G + f (n a non-negative integer, b^f rational); base G with
// exponent r*G + f, r >= 0. Everything else throws UnsupportedExponent.
GrossNumber pow(const GrossNumber& base, const GrossNumber& exp);

// Total order: the sign of the leading term of a - b decides.
Ordering compare(const GrossNumber& a, const GrossNumber& b);

struct Decomposition {
    NumberClass kind = NumberClass::zero;
    GrossNumber infinite_part;
    GrossNumber finite_part;
    GrossNumber infinitesimal_part;
};

// Partition of terms by key class; the parts sum back to the input exactly.
Decomposition classify(const GrossNumber& a);

// Canonical rendering: terms in decreasing key order, monomials as
// [coeff '*'] [base '^G' '*'] ['G' ['^' q]]. format_gross joins terms with
// spaced +/-; the compact form (used inside exponent parentheses) does not.
std::string format_gross(const GrossNumber& a);
std::string format_gross_compact(const GrossNumber& a);

inline GrossNumber operator+(const GrossNumber& a, const GrossNumber& b) { return add(a, b); }
inline GrossNumber operator-(const GrossNumber& a, const GrossNumber& b) { return sub(a, b); }
inline GrossNumber operator*(const GrossNumber& a, const GrossNumber& b) { return mul(a, b); }
inline GrossNumber operator-(const GrossNumber& a) { return negate(a); }
inline bool operator<(const GrossNumber& a, const GrossNumber& b) {
    return compare(a, b) == Ordering::less;
}
inline bool operator>(const GrossNumber& a, const GrossNumber& b) {
    return compare(a, b) == Ordering::greater;
}
inline bool operator<=(const GrossNumber& a, const GrossNumber& b) {
    return compare(a, b) != Ordering::greater;
}
inline bool operator>=(const GrossNumber& a, const GrossNumber& b) {
    return compare(a, b) != Ordering::less;
}

}  // namespace grosstm
