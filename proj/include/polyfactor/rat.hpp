#ifndef POLYFACTOR_RAT_HPP
#define POLYFACTOR_RAT_HPP

#include <gmpxx.h>
#include <string>

namespace polyfactor {

// Exact rationals. GMP keeps mpq_class canonical (gcd 1, positive denominator),
// provided canonicalize() is called after raw numerator/denominator assembly;
// the helpers below always do.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Bit size of num*den, the pivot-selection weight used by the exact
// elimination routines.
inline size_t rat_bit_size(const Rat& r) {
    return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace polyfactor

#endif
