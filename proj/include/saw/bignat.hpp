#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace saw {

/// Arbitrary-precision nonnegative integer used for every count.
using BigNat = mpz_class;

inline std::string to_decimal(const BigNat& v) { return v.get_str(10); }

inline BigNat bignat_from_u64(std::uint64_t v) {
  BigNat out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace saw
