#pragma once

#include <gmpxx.h>

#include <string>

namespace rht {

using Scalar = mpq_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text);

inline Scalar frac(long p, long q) {
    Scalar s(p, q);
    s.canonicalize();
    return s;
}

Scalar factorial(int n);
Scalar binomial(int n, int k);

inline int parity_sign(long e) { return (e & 1) ? -1 : 1; }

}  // namespace rht
