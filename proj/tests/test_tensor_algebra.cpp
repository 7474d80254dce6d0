#include <doctest.h>

#include <functional>
#include <random>

#include "rbx/random_elements.hpp"
#include "rbx/tensor_algebra.hpp"

using namespace rbx;

namespace
{

const Scalar kOne(Rational(1));
const Scalar kZero;
const Scalar kLambda = PolyQ::monomial(1, Rational(1)); // formal weight

Letter c(int s) { return Letter::composition(s); }

// Plain shuffles by choosing which output positions come from a.
LinComb shuffle_oracle(const Word &a, const Word &b)
{
	LinComb out;
	const std::size_t n = a.size() + b.size();
	for (unsigned mask = 0; mask < (1u << n); ++mask)
	{
		if (static_cast<std::size_t>(__builtin_popcount(mask)) != a.size())
			continue;
		Word w;
		std::size_t i = 0, j = 0;
		for (std::size_t p = 0; p < n; ++p)
			w.push_back((mask >> p) & 1u ? a[i++] : b[j++]);
		out.add(w, kOne);
	}
	return out;
}

std::vector<Word> words_up_to(int max_len, int max_part)
{
	std::vector<Word> out;
	std::function<void(Word &)> rec = [&](Word &w) {
		if (!w.empty())
			out.push_back(w);
		if (static_cast<int>(w.size()) == max_len)
			return;
		for (int s = 1; s <= max_part; ++s)
		{
			w.push_back(c(s));
			rec(w);
			w.pop_back();
		}
	};
	Word w;
	rec(w);
	return out;
}

} // namespace

TEST_CASE("word text form")
{
	Word w{c(2), c(1)};
	CHECK(to_string(w) == "2⊗1");
	CHECK(to_string(w, true) == "2(x)1");
	CHECK(parse_word("2,1") == w);
	CHECK(parse_word("q[2],q[3]") == Word{Letter::q_letter(2), Letter::q_letter(3)});
	CHECK(parse_word("(2; z1^1),(1; z2^1)").size() == 2);
	CHECK_THROWS(parse_word("2,q[1]"));
}

TEST_CASE("LinComb collects and drops zeros")
{
	LinComb x;
	x.add({c(1)}, kOne);
	x.add({c(1)}, Scalar(Rational(-1)));
	CHECK(x.zero());
	x.add({c(2)}, kOne);
	x.add({c(2)}, kOne);
	CHECK(x.coefficient({c(2)}) == Scalar(Rational(2)));
	CHECK(to_string(x) == "2*2");
}

TEST_CASE("mixable shuffle examples")
{
	const Letter a1 = c(2), b1 = c(3), b2 = c(5);
	LinComb expected;
	expected.add({a1, b1, b2}, kOne);
	expected.add({b1, a1, b2}, kOne);
	expected.add({b1, b2, a1}, kOne);
	expected.add({c(5), b2}, kLambda);
	expected.add({b1, c(7)}, kLambda);
	CHECK(mixable_shuffle({a1}, {b1, b2}, kLambda) == expected);
	CHECK(mixable_shuffle_direct({a1}, {b1, b2}, kLambda) == expected);

	LinComb small;
	small.add({a1, b1}, kOne);
	small.add({b1, a1}, kOne);
	small.add({c(5)}, kLambda);
	CHECK(mixable_shuffle({a1}, {b1}, kLambda) == small);

	CHECK(mixable_shuffle({a1}, {b1, b2}, kZero) == shuffle_oracle({a1}, {b1, b2}));
}

TEST_CASE("mixable shuffle over q-letters uses the q product")
{
	const auto prod = mixable_shuffle({Letter::q_letter(2)}, {Letter::q_letter(3)}, kOne);
	CHECK(prod.coefficient({Letter::q_letter(5)}) == kOne);
	CHECK(prod.coefficient({Letter::q_letter(4)}) == one_minus_q_pow(1));
	CHECK(prod.size() == 4);
}

TEST_CASE("zero-product system needs weight 0")
{
	CHECK_THROWS_AS(mixable_shuffle({Letter::x0()}, {Letter::x1()}, kOne), std::invalid_argument);
	CHECK(mixable_shuffle({Letter::x0()}, {Letter::x1()}, kZero).size() == 2);
	CHECK_THROWS_AS(mixable_shuffle(Word{}, {c(1)}, kOne), std::invalid_argument);
	CHECK_THROWS_AS(mixable_shuffle({c(1)}, {Letter::q_letter(1)}, kOne), std::invalid_argument);
}

TEST_CASE("weight 0 gives the binomial number of shuffles")
{
	for (const auto &a : words_up_to(3, 2))
		for (const auto &b : words_up_to(3, 2))
		{
			const auto prod = mixable_shuffle(a, b, kZero);
			CHECK(prod == shuffle_oracle(a, b));
			Rational total = 0;
			for (const auto &[w, coef] : prod.terms())
				total += coef.coefficient(0);
			Integer binom;
			mpz_bin_uiui(binom.get_mpz_t(), a.size() + b.size(), a.size());
			CHECK(total == Rational(binom));
		}
}

TEST_CASE("recursion equals direct enumeration")
{
	const auto words = words_up_to(3, 3);
	for (const auto &a : words)
		for (const auto &b : words)
			REQUIRE(mixable_shuffle(a, b, kLambda) == mixable_shuffle_direct(a, b, kLambda));
	const Word a{Letter::q_letter(1), Letter::q_letter(2)};
	const Word b{Letter::q_letter(2), Letter::q_letter(3)};
	CHECK(mixable_shuffle(a, b, kOne) == mixable_shuffle_direct(a, b, kOne));
}

TEST_CASE("quasi-shuffle coincides with weight 1")
{
	for (const auto &a : words_up_to(3, 3))
		for (const auto &b : words_up_to(2, 3))
			REQUIRE(quasi_shuffle(a, b) == mixable_shuffle(a, b, kOne));
	CHECK(quasi_shuffle(Word{}, Word{c(2)}) == LinComb(Word{c(2)}));
}

TEST_CASE("integer and rational weights agree with direct enumeration")
{
	const auto words = words_up_to(3, 3);
	for (const Scalar lambda : {Scalar(Rational(-1)), Scalar(Rational(2)), Scalar(Rational(1, 2))})
		for (const auto &a : words)
			for (const auto &b : words)
				REQUIRE(mixable_shuffle(a, b, lambda) == mixable_shuffle_direct(a, b, lambda));
}

TEST_CASE("q-letter quasi-shuffle coincides with weight 1")
{
	const Word a{Letter::q_letter(1), Letter::q_letter(3), Letter::q_letter(2)};
	const Word b{Letter::q_letter(2), Letter::q_letter(1)};
	CHECK(quasi_shuffle(a, b) == mixable_shuffle(a, b, kOne));
	CHECK(quasi_shuffle(a, b) == mixable_shuffle_direct(a, b, kOne));
}

TEST_CASE("long words with many distinct letters")
{
	// enough distinct letters and products that words no longer fit a 64-bit key
	const Word a{c(1), c(2), c(3), c(4), c(5), c(6)};
	const Word b{c(7), c(13), c(19), c(25), c(31), c(37)};
	const auto direct = mixable_shuffle_direct(a, b, kOne);
	CHECK(mixable_shuffle(a, b, kOne) == direct);
	CHECK(quasi_shuffle(a, b) == direct);
	CHECK(mixable_shuffle(a, b, kZero) == shuffle_oracle(a, b));
	const Word x{c(1), c(2), c(3), c(4), c(5), c(6), c(7), c(8), c(9), c(10), c(11)};
	const Word y{c(20), c(40)};
	CHECK(mixable_shuffle(x, y, kLambda) == mixable_shuffle_direct(x, y, kLambda));
	CHECK(quasi_shuffle(x, y) == mixable_shuffle_direct(x, y, kOne));
}

TEST_CASE("mixable shuffle is commutative and associative")
{
	const auto words = words_up_to(2, 2);
	for (const auto &a : words)
		for (const auto &b : words)
		{
			CHECK(mixable_shuffle(a, b, kLambda) == mixable_shuffle(b, a, kLambda));
			for (const auto &w : words)
			{
				const auto left = mixable_shuffle(mixable_shuffle(a, b, kLambda), LinComb(w), kLambda);
				const auto right = mixable_shuffle(LinComb(a), mixable_shuffle(b, w, kLambda), kLambda);
				REQUIRE(left == right);
			}
		}
}

TEST_CASE("Sha product examples")
{
	const auto a = ShaElement::embed(c(2));
	const auto b = ShaElement::embed(c(3));
	CHECK(sha_product(a, b, kLambda) == ShaElement::embed(c(5)));

	const Letter u = Letter::make_unit(LetterSystem::composition);
	LinComb expected;
	expected.add({u, c(2), c(3)}, kOne);
	expected.add({u, c(3), c(2)}, kOne);
	expected.add({u, c(5)}, kLambda);
	CHECK(sha_product(rb_operator(a), rb_operator(b), kLambda) == ShaElement(expected));

	CHECK(rb_operator(a) == ShaElement::pure_tensor({u, c(2)}));
	CHECK(rb_operator(ShaElement()).zero());
	const auto one = ShaElement::unit(LetterSystem::composition);
	CHECK(sha_product(one, a, kLambda) == a);
}

TEST_CASE("Rota-Baxter axiom on random elements")
{
	Rng rng(5);
	for (const Scalar &lambda : {kOne, kZero, Scalar(Rational(-1)), kLambda})
		for (int t = 0; t < 25; ++t)
		{
			const auto x = random_sha(rng);
			const auto y = random_sha(rng);
			const auto lhs = sha_product(rb_operator(x), rb_operator(y), lambda);
			const auto rhs = rb_operator(sha_product(x, rb_operator(y), lambda)) +
			                 rb_operator(sha_product(rb_operator(x), y, lambda)) +
			                 ShaElement(rb_operator(sha_product(x, y, lambda)).terms().scaled(lambda));
			REQUIRE(lhs == rhs);
			CHECK(sha_product(x, y, lambda) == sha_product(y, x, lambda));
		}
}

TEST_CASE("star product")
{
	Rng rng(9);
	for (int t = 0; t < 25; ++t)
	{
		const auto u = random_sha(rng);
		const auto v = random_sha(rng);
		CHECK(sha_product(rb_operator(u), rb_operator(v), kOne) == rb_operator(star_product(u, v, kOne)));
	}
	const auto a = ShaElement::embed(c(1));
	CHECK(star_product(a, ShaElement(), kOne).zero());
	const auto b = ShaElement::embed(c(2));
	CHECK(star_product(a, b, kOne) ==
	      sha_product(a, rb_operator(b), kOne) + sha_product(rb_operator(a), b, kOne) + ShaElement::embed(c(3)));
}
