#pragma once

// Exact rational scalar type and small helpers shared by all modules.
// Everything downstream assumes canonical form (gcd(num,den)=1, den>0),
// which gmpxx arithmetic maintains automatically.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ade {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

// Renders as "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline bool is_integer(const Rat& r) {
    return r.get_den() == 1;
}

// Floor to an integer (round toward minus infinity).
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Least common multiple of the denominators of a list of rationals.
inline Int lcm_of_denominators(const std::vector<Rat>& vals) {
    Int l = 1;
    for (const Rat& v : vals) l = lcm_int(l, v.get_den());
    return l;
}

}  // namespace ade
