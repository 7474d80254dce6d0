#include <doctest.h>

#include <random>

#include "rbx/coefficients.hpp"
#include "rbx/trunc_series.hpp"

using namespace rbx;

namespace
{

PolyQ q_poly(std::initializer_list<long> c)
{
	std::vector<Rational> v;
	for (long x : c)
		v.emplace_back(x);
	return PolyQ(std::move(v));
}

// a/b == c/d as rational functions iff a d == c b
bool cross_equal(const RatFuncQ &x, const PolyQ &n, const PolyQ &d)
{
	return x.numerator() * d == n * x.denominator();
}

} // namespace

TEST_CASE("rationals are reduced and parse back")
{
	CHECK(to_string(make_rational(6, -4)) == "-3/2");
	CHECK(to_string(make_rational(4, 2)) == "2");
	CHECK(parse_rational("-3/2") == make_rational(-3, 2));
	CHECK(parse_rational(" 7 ") == Rational(7));
	CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
	CHECK_THROWS(parse_rational("1/0"));
	CHECK_THROWS(parse_rational("abc"));
	CHECK_THROWS(parse_rational("1/2x"));
}

TEST_CASE("polynomial text form round-trips")
{
	const PolyQ p = q_poly({1, 0, -1});
	CHECK(to_string(p) == "1 - q^2");
	CHECK(parse_poly("1 - q^2") == p);
	CHECK(to_string(PolyQ::monomial(1, make_rational(1, 2))) == "1/2*q");
	CHECK(to_string(PolyQ()) == "0");
	for (const char *s : {"0", "1", "-1", "1 - q", "-3/4*q^3 + q", "2 - 2*q + q^2"})
		CHECK(parse_poly(to_string(parse_poly(s))) == parse_poly(s));
	CHECK(one_minus_q_pow(3) == q_poly({1, 0, 0, -1}));
}

TEST_CASE("polynomial division and gcd")
{
	const PolyQ a = q_poly({-1, 0, 1}); // q^2 - 1
	const PolyQ b = q_poly({1, 1});     // q + 1
	auto [quot, rem] = a.divmod(b);
	CHECK(quot == q_poly({-1, 1}));
	CHECK(rem.zero());
	CHECK(poly_gcd(a, q_poly({-1, 1})) == q_poly({-1, 1}));
	CHECK(poly_gcd(q_poly({1, 1}), q_poly({2})) == q_poly({1}));
	CHECK(a.evaluate(Rational(3)) == Rational(8));
}

TEST_CASE("ratfunc_normalize examples")
{
	CHECK(ratfunc_normalize(q_poly({1, 0, -1}), q_poly({1, -1})) == RatFuncQ(q_poly({1, 1})));
	CHECK(ratfunc_normalize(PolyQ(), q_poly({1, 1})).zero());
	CHECK(ratfunc_normalize(q_poly({0, 1, 0, -1}), q_poly({0, 1, 1})) == RatFuncQ(q_poly({1, -1})));
	CHECK_THROWS_AS(ratfunc_normalize(q_poly({1}), PolyQ()), std::domain_error);
}

TEST_CASE("ratfunc canonical form matches cross multiplication")
{
	std::mt19937 rng(7);
	std::uniform_int_distribution<long> d(-3, 3);
	for (int t = 0; t < 200; ++t)
	{
		PolyQ n = q_poly({d(rng), d(rng), d(rng)});
		PolyQ den = q_poly({d(rng), d(rng), 1});
		PolyQ c = q_poly({d(rng), 1});
		RatFuncQ r = ratfunc_normalize(n, den);
		CHECK(cross_equal(r, n, den));
		CHECK(ratfunc_normalize(n * c, den * c) == r);
		CHECK(r.denominator().coefficients().back() == Rational(1));
		if (!r.zero())
			CHECK(poly_gcd(r.numerator(), r.denominator()).degree() == 0);
		CHECK(parse_ratfunc(to_string(r)) == r);
	}
}

TEST_CASE("ratfunc field operations")
{
	const RatFuncQ x = ratfunc_normalize(q_poly({1}), q_poly({1, -1}));
	const RatFuncQ y = ratfunc_normalize(q_poly({0, 1}), q_poly({1, -1}));
	CHECK(x - y == RatFuncQ(1));
	CHECK((x * y) / y == x);
	CHECK(x.evaluate(make_rational(1, 2)) == Rational(2));
	CHECK(x.evaluate(0.5) == doctest::Approx(2.0));
	CHECK_THROWS(x / RatFuncQ());
	CHECK(to_string(x) == "(-1) / (-1 + q)");
}

TEST_CASE("truncated series products")
{
	TruncSeries<Rational> a(2, Rational(0)), b(2, Rational(0));
	a[0] = 1;
	a[1] = 1;
	b[0] = 1;
	b[1] = -1;
	auto c = series_mul(a, b);
	CHECK(c[0] == 1);
	CHECK(c[1] == 0);
	CHECK(c[2] == -1);

	TruncSeries<Rational> t(1, Rational(0));
	t[1] = 1;
	CHECK(series_mul(t, t)[1] == 0);
	CHECK_THROWS(series_mul(a, t));
}

TEST_CASE("exp and log1p")
{
	TruncSeries<Rational> t(3, Rational(0));
	t[1] = 1;
	auto e = series_exp(t);
	CHECK(e[0] == 1);
	CHECK(e[1] == 1);
	CHECK(e[2] == make_rational(1, 2));
	CHECK(e[3] == make_rational(1, 6));
	auto l = series_log1p(t);
	CHECK(l[1] == 1);
	CHECK(l[2] == make_rational(-1, 2));
	CHECK(l[3] == make_rational(1, 3));
	auto round = series_exp(l);
	CHECK(round[0] == 1);
	CHECK(round[1] == 1);
	CHECK(round[2] == 0);
	CHECK(round[3] == 0);
	CHECK(series_exp(TruncSeries<Rational>(3, Rational(0)))[0] == 1);
	TruncSeries<Rational> bad(3, Rational(0));
	bad[0] = 1;
	CHECK_THROWS_AS(series_exp(bad), std::domain_error);
	CHECK_THROWS_AS(series_log1p(bad), std::domain_error);
}

TEST_CASE("exp of log1p is 1 + a for random series")
{
	std::mt19937 rng(11);
	std::uniform_int_distribution<long> d(-5, 5);
	for (int trial = 0; trial < 20; ++trial)
	{
		TruncSeries<Rational> a(6, Rational(0));
		for (std::size_t i = 1; i <= 6; ++i)
			a[i] = make_rational(d(rng), 1 + std::abs(d(rng)));
		auto back = series_exp(series_log1p(a));
		CHECK(back[0] == 1);
		for (std::size_t i = 1; i <= 6; ++i)
			CHECK(back[i] == a[i]);
	}
}
