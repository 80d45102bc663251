#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace adict {

/* Exact coefficient arithmetic.  A Field is either Q (p == 0) or F_p for a
 * prime p.  Scalars are stored as mpq_class in canonical form: reduced
 * fraction over Q, least nonnegative residue with denominator 1 over F_p.
 * Every operation is exact; there is no floating point anywhere in the
 * engine. */

using Scalar = mpq_class;

struct Field {
    unsigned long p = 0;  // 0 = rationals, otherwise a prime modulus

    bool is_fp() const { return p != 0; }
    bool operator==(const Field&) const = default;

    Scalar norm(const Scalar& a) const;           // canonicalize into the field
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;  // throws on b = 0
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar from_long(long num, long den = 1) const;
    Scalar parse(const std::string& s) const;     // "3", "-7/4"
    std::string str(const Scalar& a) const;
    std::string tag() const;                      // "Q" or "F_p"
};

inline bool is_zero(const Scalar& a) { return sgn(a) == 0; }
inline bool is_one(const Scalar& a) { return a == 1; }

bool is_prime(unsigned long p);

}  // namespace adict
