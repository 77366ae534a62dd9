#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qseries {

using Integer = mpz_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline std::string to_string(const Integer& x) { return x.get_str(); }

// acc += a * b without temporaries
inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline void sub_product(Integer& acc, const Integer& a, const Integer& b) {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace qseries
