#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace seqlat {

// Exact arbitrary-precision signed integer. Every count and coefficient in
// this library is one of these; nothing is ever rounded.
using Int = mpz_class;

inline std::size_t bit_length(const Int& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline std::string to_string(const Int& v) { return v.get_str(); }

} // namespace seqlat
