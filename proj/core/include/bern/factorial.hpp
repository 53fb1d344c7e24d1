#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace bern {

// lo * (lo+1) * ... * hi by binary splitting; 1 when lo > hi.
mpz_class range_product(std::uint64_t lo, std::uint64_t hi);

// n! by binary splitting. With threads > 1 the range is cut into that many
// blocks multiplied concurrently, then combined in order.
mpz_class factorial(std::uint64_t n, unsigned threads = 1);

}  // namespace bern
