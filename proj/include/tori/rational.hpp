#ifndef TORI_RATIONAL_HPP
#define TORI_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace tori {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "p/q" or a plain/scientific decimal ("-0.66", "1.5e-3") exactly.
Rat parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_string(const Rat& x);

// Nearest dyadic m/2^bits; |result - x| <= 2^-(bits+1).
Rat dyadic_round(const Rat& x, long bits);

// Smallest dyadic m/2^bits that is >= x.
Rat dyadic_ceil(const Rat& x, long bits);

// 2^e as a rational (e may be negative).
Rat pow2(long e);

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Int int_pow(const Int& base, unsigned long e);

// Total size of numerator and denominator in bits; cheap blowup probe.
size_t rat_bits(const Rat& x);

} // namespace tori

#endif
