#include <doctest.h>

#include <cmath>

#include "rbx/numeric_eval.hpp"
#include "rbx/operator_gallery.hpp"
#include "rbx/random_elements.hpp"

using namespace rbx;

namespace
{

FiniteSequence constant(std::size_t window, const Rational &v) { return FiniteSequence(std::vector<Rational>(window, v)); }

FiniteSequence inverse_powers(std::size_t window, int s)
{
	std::vector<Rational> v;
	for (std::size_t i = 1; i <= window; ++i)
	{
		Integer d = 1;
		for (int j = 0; j < s; ++j)
			d *= static_cast<unsigned long>(i);
		v.push_back(make_rational(Integer(1), d));
	}
	return FiniteSequence(std::move(v));
}

XPoly x_pow(std::size_t m) { return XPoly::monomial(m, RatFuncQ(1)); }

RatFuncQ rf(const PolyQ &n, const PolyQ &d) { return ratfunc_normalize(n, d); }

double eval_at(const XPoly &f, double x, double q)
{
	double out = 0;
	for (std::size_t m = 0; m < f.coefficients().size(); ++m)
		out += f.coefficients()[m].evaluate(q) * std::pow(x, static_cast<double>(m));
	return out;
}

} // namespace

TEST_CASE("partial sum operator")
{
	const auto z = z_apply(constant(6, 1));
	for (std::size_t k = 1; k <= 6; ++k)
		CHECK(z(k) == Rational(static_cast<long>(k) - 1));
	const auto zz = z_apply(z);
	for (std::size_t k = 1; k <= 6; ++k)
	{
		const long kk = static_cast<long>(k);
		CHECK(zz(k) == make_rational((kk - 1) * (kk - 2), 2));
	}
	CHECK_THROWS(FiniteSequence({Rational(1)}));
	CHECK_THROWS(z * constant(5, 1));
}

TEST_CASE("nested partial sums give truncated zeta values")
{
	const std::size_t N = 30;
	// zeta_N(2,1) = Z[n^-2 Z[n^-1]](N+1)
	const auto inner = z_apply(inverse_powers(N + 1, 1));
	const auto outer = z_apply(inverse_powers(N + 1, 2) * inner);
	CHECK(outer(N + 1) == nested_sum_oracle(Composition({2, 1}), static_cast<std::int64_t>(N)));
}

TEST_CASE("Z is Rota-Baxter of weight 1")
{
	Rng rng(3);
	for (int t = 0; t < 20; ++t)
	{
		const auto f = random_sequence(rng, 50);
		const auto g = random_sequence(rng, 50);
		CHECK(z_apply(f) * z_apply(g) == z_apply(f * z_apply(g)) + z_apply(z_apply(f) * g) + z_apply(f * g));
	}
}

TEST_CASE("integration")
{
	const RationalPoly one(Rational(1));
	CHECK(integrate(one) == RationalPoly::monomial(1, Rational(1)));
	CHECK(integrate(one) * integrate(one) == integrate(one * integrate(one)) + integrate(integrate(one) * one));
	Rng rng(4);
	for (int t = 0; t < 30; ++t)
	{
		const auto f = random_rational_poly(rng, 6);
		const auto g = random_rational_poly(rng, 6);
		CHECK(integrate(f) * integrate(g) == integrate(f * integrate(g)) + integrate(integrate(f) * g));
	}
}

TEST_CASE("q-dilation operators on monomials")
{
	const PolyQ q = PolyQ::monomial(1, Rational(1));
	CHECK(p_q(x_pow(1)) == XPoly::monomial(1, rf(q, one_minus_q_pow(1))));
	CHECK(p_q(x_pow(2)) == XPoly::monomial(2, rf(q * q, one_minus_q_pow(2))));
	CHECK(p_hat_q(x_pow(3)) == x_pow(3) + p_q(x_pow(3)));
	CHECK_THROWS_AS(p_q(x_pow(0)), std::domain_error);
	CHECK_THROWS_AS(p_hat_q(x_pow(0) + x_pow(1)), std::domain_error);
	CHECK(p_q(XPoly()).zero());
}

TEST_CASE("Jackson integral on monomials")
{
	CHECK(jackson_j(x_pow(0)) == x_pow(1));
	CHECK(jackson_j(x_pow(1)) == XPoly::monomial(2, rf(PolyQ(Rational(1)), PolyQ{Rational(1), Rational(1)})));
	CHECK(to_string(jackson_j(x_pow(1))) == "(" + to_string(rf(PolyQ(Rational(1)), PolyQ{Rational(1), Rational(1)})) + ")*x^2");
}

TEST_CASE("weights of P_q, P_hat_q and the Jackson relation")
{
	Rng rng(8);
	const RatFuncQ one_minus_q(one_minus_q_pow(1));
	for (int t = 0; t < 15; ++t)
	{
		const auto f = random_xpoly(rng, 5, true);
		const auto g = random_xpoly(rng, 5, true);
		CHECK(p_q(f) * p_q(g) == p_q(f * p_q(g)) + p_q(p_q(f) * g) + p_q(f * g));
		CHECK(p_hat_q(f) * p_hat_q(g) == p_hat_q(f * p_hat_q(g)) + p_hat_q(p_hat_q(f) * g) - p_hat_q(f * g));

		const auto u = random_xpoly(rng, 5, false);
		const auto v = random_xpoly(rng, 5, false);
		CHECK(jackson_j(u) * jackson_j(v) + jackson_j(u * v * x_pow(1)).scaled(one_minus_q) ==
		      jackson_j(jackson_j(u) * v + u * jackson_j(v)));
		CHECK(jackson_j(u) == p_hat_q(multiply_by_x(u)).scaled(one_minus_q));
	}
}

TEST_CASE("P_q specializes to the dilation sum")
{
	Rng rng(12);
	for (double q : {0.5, 0.3})
		for (int t = 0; t < 10; ++t)
		{
			const auto f = random_xpoly(rng, 4, true);
			const double x = 0.7;
			double direct = 0;
			for (int n = 1; n <= 200; ++n)
				direct += eval_at(f, x * std::pow(q, n), q);
			CHECK(std::fabs(eval_at(p_q(f), x, q) - direct) <= 1e-10);
		}
}
