// Exact rational scalar layer: thin helpers over GMP's mpq_class/mpz_class
// plus the library-wide error type.  Every numeric quantity in this library
// is exact; nothing here ever rounds.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace ellsurf {

using Int = mpz_class;
using Rat = mpq_class;

// Domain error carrying a stable machine-readable code alongside the human
// message.  CLI layers map these to {"error":{...}} and exit code 1.
struct Error : std::runtime_error {
    std::string code;
    std::map<std::string, std::string> context;

    Error(std::string code_, const std::string& detail,
          std::map<std::string, std::string> ctx = {})
        : std::runtime_error(detail), code(std::move(code_)), context(std::move(ctx)) {}
};

// Verification failure: a checked mathematical fact did not hold.  CLI maps
// these to exit code 2 (as opposed to bad input, which is exit code 1).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ----- parsing / printing -----

// Accepts "p", "-p", "p/q"; whitespace is not tolerated (inputs are
// machine-generated JSON fields).
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error("bad-rational", "empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw Error("bad-rational", "cannot parse rational literal '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// GMP leaves two-argument mpq constructions unreduced, and every comparison
// assumes canonical form; route all computed numerator/denominator pairs
// through here.
inline Rat rat_frac(const Int& num, const Int& den) {
    if (den == 0) throw Error("bad-rational", "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// ----- integrality and small-integer extraction -----

inline bool rat_is_int(const Rat& r) { return r.get_den() == 1; }

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline long int_to_long(const Int& z) {
    if (!z.fits_slong_p()) throw Error("overflow", "integer exceeds machine range: " + z.get_str());
    return z.get_si();
}

inline long rat_to_long(const Rat& r) {
    if (!rat_is_int(r)) throw Error("not-integral", "expected integer, got " + rat_str(r));
    return int_to_long(r.get_num());
}

// ----- floors, fractional parts -----

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// Representative of r mod 1 in [0, 1).
inline Rat mod1(const Rat& r) {
    Rat f = r - Rat(rat_floor(r));
    f.canonicalize();
    return f;
}

// Representative of r mod 2 in [0, 2); used for discriminant quadratic forms.
inline Rat mod2(const Rat& r) {
    Rat h = r / 2;
    Rat f = 2 * (h - Rat(rat_floor(h)));
    f.canonicalize();
    return f;
}

inline Rat rat_pow(Rat base, unsigned long e) {
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// ----- small-integer arithmetic helpers -----

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

// a^e mod nothing — plain integer power with overflow discipline left to
// callers (exponents here are tiny: group orders, multiplicities).
inline long pow_long(long a, unsigned e) {
    long acc = 1;
    while (e--) acc *= a;
    return acc;
}

}  // namespace ellsurf
