#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "radsurj/error.hpp"

namespace radsurj {

using BigInt = mpz_class;

/// Exact rational. gmpxx keeps results of arithmetic canonical (lowest
/// terms, positive denominator, zero as 0/1).
using BigRat = mpq_class;

inline std::string to_string(const BigRat& q) { return q.get_str(); }

inline BigRat parse_rational(std::string_view text)
{
    BigRat q;
    if (q.set_str(std::string(text), 10) != 0)
        throw InputError("invalid rational literal '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

inline BigRat rat_pow(const BigRat& base, unsigned long exp)
{
    BigRat result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return result;
}

} // namespace radsurj
