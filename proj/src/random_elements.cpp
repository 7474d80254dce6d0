#include "rbx/random_elements.hpp"

namespace rbx
{

namespace
{

int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

} // namespace

Rational random_rational(Rng &rng, int max_num, int max_den)
{
	int num = 0;
	while (num == 0)
		num = uniform(rng, -max_num, max_num);
	return make_rational(num, uniform(rng, 1, max_den));
}

ShaElement random_sha(Rng &rng, int max_terms, int max_len, int max_payload)
{
	LinComb terms;
	const int count = uniform(rng, 1, max_terms);
	for (int t = 0; t < count; ++t)
	{
		Word w;
		w.push_back(uniform(rng, 0, 2) == 0 ? Letter::make_unit(LetterSystem::composition)
		                                    : Letter::composition(uniform(rng, 1, max_payload)));
		const int tail = uniform(rng, 0, max_len - 1);
		for (int i = 0; i < tail; ++i)
			w.push_back(Letter::composition(uniform(rng, 1, max_payload)));
		terms.add(w, Scalar(random_rational(rng)));
	}
	return ShaElement(std::move(terms));
}

RationalPoly random_rational_poly(Rng &rng, int max_degree)
{
	std::vector<Rational> c(static_cast<std::size_t>(uniform(rng, 0, max_degree)) + 1);
	for (auto &v : c)
		v = uniform(rng, 0, 3) == 0 ? Rational(0) : random_rational(rng);
	return RationalPoly(std::move(c));
}

XPoly random_xpoly(Rng &rng, int max_degree, bool zero_constant)
{
	std::vector<RatFuncQ> c(static_cast<std::size_t>(uniform(rng, zero_constant ? 1 : 0, max_degree)) + 1);
	for (std::size_t i = zero_constant ? 1 : 0; i < c.size(); ++i)
	{
		if (uniform(rng, 0, 3) == 0)
			continue;
		const Rational b = uniform(rng, 0, 1) == 0 ? Rational(0) : random_rational(rng);
		c[i] = RatFuncQ(PolyQ{random_rational(rng), b});
	}
	return XPoly(std::move(c));
}

FiniteSequence random_sequence(Rng &rng, std::size_t window)
{
	std::vector<Rational> v(window);
	for (auto &x : v)
		x = uniform(rng, 0, 4) == 0 ? Rational(0) : random_rational(rng, 9, 7);
	return FiniteSequence(std::move(v));
}

} // namespace rbx
