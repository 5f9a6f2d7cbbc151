#ifndef BLOWUP_SCALAR_HPP
#define BLOWUP_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace blowup {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) through every arithmetic operation.
using Scalar = mpq_class;

using Vec = std::vector<Scalar>;

// Parses "p", "-p", "p/q" with arbitrary-precision parts.
Scalar parse_scalar(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string scalar_to_string(const Scalar& s);

// Combined bit length of numerator and denominator; pivot-selection heuristic.
std::size_t scalar_bits(const Scalar& s);

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec scaled(const Vec& v, const Scalar& c);
void add_scaled(Vec& dst, const Vec& src, const Scalar& c);

}  // namespace blowup

#endif
