#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tracklab {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p" or "p/q"; exact, no floating point.
Rat rat_from_string(const std::string& s);

// Canonical "p" or "p/q" (q > 1 only when needed).
std::string rat_to_string(const Rat& q);

inline int sgn(const Rat& q) { return ::sgn(q); }

// 2^k as a rational for k possibly negative.
inline Rat pow2(int k) {
    Rat q = 1;
    if (k >= 0) {
        mpz_ui_pow_ui(mpq_numref(q.get_mpq_t()), 2, static_cast<unsigned long>(k));
    } else {
        mpz_ui_pow_ui(mpq_denref(q.get_mpq_t()), 2, static_cast<unsigned long>(-k));
    }
    return q;
}

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Scales a rational vector to a primitive integer vector (gcd 1),
// preserving direction. Zero vector maps to zero vector.
IntVec primitive_integer(const RatVec& v);

std::string vec_to_string(const RatVec& v);
std::string vec_to_string(const IntVec& v);

}  // namespace tracklab
