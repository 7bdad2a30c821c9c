#pragma once

#include <gmpxx.h>

#include <string>

namespace hcover {

// Exact rational scalar. Weights, LP values and parameter values are kept
// exact so golden equality tests (25/8, 5/2, ...) hold bit-for-bit.
using Rational = mpq_class;

// Arithmetic mode for the LP layer. Exact mode pivots in rationals with zero
// tolerances; floating mode runs double simplex with the tolerances below.
enum class Arith { exact, floating };

struct Tolerances {
    Rational feas;      // feasibility / duality-gap tolerance
    Rational slack_eps; // threshold separating cover(e) > 0 from noise
};

Tolerances tolerances(Arith mode);

// num/den with canonicalization (mpq_class(a,b) alone does not canonicalize).
Rational make_rational(long num, long den);

Rational rational_from_double(double x);

// Accepts "3", "-7", "5/2", "2.5", ".25".
Rational parse_rational(const std::string& token);

// "p/q", or just "p" for integers.
std::string rational_string(const Rational& q);

double rational_double(const Rational& q);

} // namespace hcover
