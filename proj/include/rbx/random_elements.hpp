#ifndef RBX_RANDOM_ELEMENTS_HPP
#define RBX_RANDOM_ELEMENTS_HPP

#include <random>

#include "rbx/coefficients.hpp"
#include "rbx/operator_gallery.hpp"
#include "rbx/tensor_algebra.hpp"

namespace rbx
{

using Rng = std::mt19937_64;

// Nonzero rational with |numerator| <= max_num and denominator <= max_den.
Rational random_rational(Rng &rng, int max_num = 6, int max_den = 4);

// Sum of up to max_terms pure tensors over composition letters 1..max_payload;
// heads are the unit letter about a third of the time.
ShaElement random_sha(Rng &rng, int max_terms = 3, int max_len = 3, int max_payload = 3);

RationalPoly random_rational_poly(Rng &rng, int max_degree);

// Coefficients a + b q with random rationals a, b (b possibly zero).
XPoly random_xpoly(Rng &rng, int max_degree, bool zero_constant);

FiniteSequence random_sequence(Rng &rng, std::size_t window);

} // namespace rbx

#endif
