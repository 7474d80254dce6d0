#include "rbx/identity_engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rbx/operator_gallery.hpp"
#include "rbx/random_elements.hpp"
#include "rbx/trunc_series.hpp"

namespace rbx
{

namespace
{

const Scalar kOne(Rational(1));

using ShaSeries = TruncSeries<ShaElement>;

std::string series_text(const ShaSeries &s)
{
	std::string out;
	for (std::size_t i = 0; i <= s.order(); ++i)
		out += (i ? "; " : "") + std::string("t^") + std::to_string(i) + ": " + to_string(s[i]);
	return out;
}

std::optional<std::string> first_difference(const LinComb &lhs, const LinComb &rhs)
{
	const LinComb diff = lhs - rhs;
	if (diff.zero())
		return std::nullopt;
	const Word &w = diff.terms().begin()->first;
	return to_string(w) + ": lhs " + to_string(lhs.coefficient(w)) + ", rhs " + to_string(rhs.coefficient(w));
}

std::optional<std::string> first_difference(const ShaSeries &lhs, const ShaSeries &rhs)
{
	for (std::size_t i = 0; i <= lhs.order(); ++i)
		if (auto d = first_difference(lhs[i].terms(), rhs[i].terms()))
			return "t^" + std::to_string(i) + " " + *d;
	return std::nullopt;
}

void require_order(int order, const char *what)
{
	if (order < 1 || order > 8)
		throw std::invalid_argument(std::string(what) + ": order must be in [1, 8]");
}

auto sha_mul(const Scalar &lambda)
{
	return [lambda](const ShaElement &x, const ShaElement &y) { return sha_product(x, y, lambda); };
}

// (-1)^(i-1) / i * j(a^i) for i = 1..order, computed as log(1 + j(a) t) in Sha.
ShaSeries log_one_plus_at(std::size_t order)
{
	ShaSeries at(order, ShaElement());
	at[1] = ShaElement::embed(Letter::monomial(1));
	return series_log1p(at, sha_mul(kOne));
}

IdentityReport make_report(std::string name, std::map<std::string, std::string> params, const ShaSeries &lhs,
                           const ShaSeries &rhs)
{
	IdentityReport r;
	r.name = std::move(name);
	r.params = std::move(params);
	r.lhs = series_text(lhs);
	r.rhs = series_text(rhs);
	r.equal = lhs == rhs;
	r.first_diff = first_difference(lhs, rhs);
	return r;
}

} // namespace

IdentityReport spitzer_check(int order)
{
	require_order(order, "spitzer_check");
	const auto n = static_cast<std::size_t>(order);
	const auto unit = ShaElement::unit(LetterSystem::monomial);
	const auto a = ShaElement::embed(Letter::monomial(1));

	ShaSeries p_log = log_one_plus_at(n);
	for (std::size_t i = 0; i <= n; ++i)
		p_log[i] = rb_operator(p_log[i]);
	const ShaSeries lhs = series_exp(p_log, sha_mul(kOne), unit);

	// P(P(...P(a) a ...) a)
	ShaSeries rhs(n, ShaElement());
	rhs[0] = unit;
	ShaElement nested = rb_operator(a);
	for (std::size_t i = 1; i <= n; ++i)
	{
		rhs[i] = nested;
		nested = rb_operator(sha_product(nested, a, kOne));
	}
	return make_report("spitzer", {{"order", std::to_string(order)}, {"weight", "1"}}, lhs, rhs);
}

IdentityReport exp_star_log_check(int order)
{
	require_order(order, "exp_star_log_check");
	const auto n = static_cast<std::size_t>(order);
	const auto unit = ShaElement::unit(LetterSystem::monomial);

	// The star product has no unit, so the powers start at u rather than 1.
	auto star = [](const ShaElement &u, const ShaElement &v) { return star_product(u, v, kOne); };
	const ShaSeries u = log_one_plus_at(n);
	ShaSeries lhs = u;
	lhs[0] = unit;
	ShaSeries power = u;
	for (std::size_t k = 2; k <= n; ++k)
	{
		power = series_mul(power, u, star).scaled(make_rational(1, static_cast<long>(k)));
		lhs += power;
	}

	ShaSeries rhs(n, ShaElement());
	rhs[0] = unit;
	for (std::size_t i = 1; i <= n; ++i)
		rhs[i] = ShaElement::pure_tensor(Word(i, Letter::monomial(1)));
	return make_report("expstar", {{"order", std::to_string(order)}, {"weight", "1"}}, lhs, rhs);
}

IdentityReport bohnenblust_spitzer_check(int n)
{
	if (n < 2 || n > 5)
		throw std::invalid_argument("bohnenblust_spitzer_check: n must be in [2, 5]");

	// Payloads 2, 4, 8, ...: every subset sum is distinct, so no two products
	// of distinct blocks collapse onto the same letter.
	std::vector<Letter> s;
	for (int i = 0; i < n; ++i)
		s.push_back(Letter::composition(2 << i));

	ShaElement lhs;
	std::vector<int> perm(static_cast<std::size_t>(n));
	std::iota(perm.begin(), perm.end(), 0);
	std::size_t permutations = 0;
	do
	{
		ShaElement nested = rb_operator(ShaElement::embed(s[static_cast<std::size_t>(perm.back())]));
		for (std::size_t i = perm.size() - 1; i-- > 0;)
			nested = rb_operator(sha_product(ShaElement::embed(s[static_cast<std::size_t>(perm[i])]), nested, kOne));
		lhs += nested;
		++permutations;
	} while (std::next_permutation(perm.begin(), perm.end()));

	ShaElement rhs;
	const auto partitions = set_partitions(n);
	for (const auto &part : partitions)
	{
		Integer coef = (n - static_cast<int>(part.blocks.size())) % 2 == 0 ? 1 : -1;
		ShaElement product = ShaElement::unit(LetterSystem::composition);
		for (const auto &block : part.blocks)
		{
			int payload = 0;
			for (int j : block)
				payload += s[static_cast<std::size_t>(j - 1)].index;
			for (std::size_t k = 2; k < block.size(); ++k)
				coef *= static_cast<unsigned long>(k);
			product = sha_product(product, rb_operator(ShaElement::embed(Letter::composition(payload))), kOne);
		}
		rhs += product * Rational(coef);
	}

	IdentityReport r;
	r.name = "bohnenblust";
	r.params = {{"n", std::to_string(n)},
	            {"permutations", std::to_string(permutations)},
	            {"partitions", std::to_string(partitions.size())},
	            {"weight", "1"}};
	r.lhs = to_string(lhs);
	r.rhs = to_string(rhs);
	r.equal = lhs == rhs;
	r.first_diff = first_difference(lhs.terms(), rhs.terms());
	return r;
}

namespace
{

void require_congruence_input(const Word &w, int p)
{
	if (p != 2 && p != 3 && p != 5 && p != 7)
		throw std::invalid_argument("congruence: p must be one of 2, 3, 5, 7");
	if (w.empty())
		throw std::invalid_argument("congruence: word must be nonempty");
	for (const auto &l : w)
		if (l.unit || (l.system != LetterSystem::composition && l.system != LetterSystem::monomial))
			throw std::invalid_argument("congruence: word must use composition or monomial letters");
}

Letter letter_power(const Letter &l, int p)
{
	return l.system == LetterSystem::composition ? Letter::composition(p * l.index) : Letter::monomial(p * l.index);
}

} // namespace

LinComb freshman_power(const Word &w, int p)
{
	require_congruence_input(w, p);
	const ShaElement base = rb_operator(ShaElement::pure_tensor(w));
	ShaElement power = base;
	for (int i = 1; i < p; ++i)
		power = sha_product(power, base, kOne);

	LinComb tail;
	for (const auto &[word, c] : power.terms().terms())
	{
		if (!word.front().unit)
			throw std::logic_error("freshman_power: head letter is not the unit");
		tail.add(Word(word.begin() + 1, word.end()), c);
	}
	return tail;
}

IdentityReport congruence_check(const Word &w, int p)
{
	const LinComb power = freshman_power(w, p);
	Word target;
	for (const auto &l : w)
		target.push_back(letter_power(l, p));

	// Reduce every coefficient mod p; a non-integer coefficient fails.
	LinComb reduced;
	bool integral = true;
	for (const auto &[word, c] : power.terms())
	{
		if (!c.is_constant() || c.coefficient(0).get_den() != 1)
		{
			integral = false;
			reduced.add(word, c);
			continue;
		}
		Integer r = c.coefficient(0).get_num() % p;
		if (r < 0)
			r += p;
		reduced.add(word, Scalar(Rational(r)));
	}
	const LinComb expected(target);

	IdentityReport rep;
	rep.name = "congruence";
	rep.params = {{"word", to_string(w)}, {"p", std::to_string(p)}, {"terms", std::to_string(power.size())}};
	rep.lhs = to_string(reduced);
	rep.rhs = to_string(expected);
	rep.equal = integral && reduced == expected;
	rep.first_diff = first_difference(reduced, expected);
	return rep;
}

IdentityReport rb_axiom_check(const Scalar &lambda, int trials, std::uint64_t seed)
{
	Rng rng(seed);
	IdentityReport rep;
	rep.name = "rbaxiom";
	rep.params = {{"weight", to_string(lambda)}, {"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}};
	rep.equal = true;
	for (int t = 0; t < trials; ++t)
	{
		const ShaElement x = random_sha(rng);
		const ShaElement y = random_sha(rng);
		const ShaElement px = rb_operator(x);
		const ShaElement py = rb_operator(y);
		const ShaElement lhs = sha_product(px, py, lambda);
		ShaElement rhs = rb_operator(sha_product(x, py, lambda)) + rb_operator(sha_product(px, y, lambda));
		if (!lambda.zero())
			rhs += ShaElement(rb_operator(sha_product(x, y, lambda)).terms().scaled(lambda));
		if (!(lhs == rhs) || t == 0)
		{
			rep.lhs = to_string(lhs);
			rep.rhs = to_string(rhs);
		}
		if (!(lhs == rhs))
		{
			rep.equal = false;
			rep.first_diff = "trial " + std::to_string(t) + " " + first_difference(lhs.terms(), rhs.terms()).value();
			break;
		}
	}
	return rep;
}

namespace
{

std::string sequence_text(const FiniteSequence &f)
{
	std::string out = "[";
	for (std::size_t i = 0; i < f.window(); ++i)
		out += (i ? ", " : "") + to_string(f.values()[i]);
	return out + "]";
}

std::string x_text(const RationalPoly &p) { return to_string(p, "x"); }

template <typename Check, typename Text>
IdentityReport run_trials(std::string name, std::map<std::string, std::string> params, int trials, Check &&check,
                          Text &&text)
{
	IdentityReport rep;
	rep.name = std::move(name);
	rep.params = std::move(params);
	rep.params["trials"] = std::to_string(trials);
	rep.equal = true;
	for (int t = 0; t < trials; ++t)
	{
		auto [lhs, rhs, label] = check();
		const bool ok = lhs == rhs;
		if (t == 0 || !ok)
		{
			rep.lhs = text(lhs);
			rep.rhs = text(rhs);
		}
		if (!ok)
		{
			rep.equal = false;
			rep.first_diff = "trial " + std::to_string(t) + ": " + label;
			break;
		}
	}
	return rep;
}

} // namespace

IdentityReport z_rb_check(std::size_t window, int trials, std::uint64_t seed)
{
	Rng rng(seed);
	return run_trials(
	    "zrb", {{"window", std::to_string(window)}, {"seed", std::to_string(seed)}, {"weight", "1"}}, trials, [&] {
		    const FiniteSequence f = random_sequence(rng, window);
		    const FiniteSequence g = random_sequence(rng, window);
		    const FiniteSequence zf = z_apply(f);
		    const FiniteSequence zg = z_apply(g);
		    return std::tuple{zf * zg, z_apply(f * zg) + z_apply(zf * g) + z_apply(f * g), std::string("Z[f]Z[g]")};
	    },
	    [](const FiniteSequence &f) { return sequence_text(f); });
}

IdentityReport integration_check(int max_degree, int trials, std::uint64_t seed)
{
	Rng rng(seed);
	return run_trials(
	    "integration", {{"degree", std::to_string(max_degree)}, {"seed", std::to_string(seed)}, {"weight", "0"}},
	    trials, [&] {
		    const RationalPoly f = random_rational_poly(rng, max_degree);
		    const RationalPoly g = random_rational_poly(rng, max_degree);
		    return std::tuple{integrate(f) * integrate(g), integrate(f * integrate(g)) + integrate(integrate(f) * g),
		                      std::string("I(f)I(g)")};
	    },
	    x_text);
}

IdentityReport jackson_check(int max_degree, int trials, std::uint64_t seed)
{
	Rng rng(seed);
	const RatFuncQ one_minus_q(one_minus_q_pow(1));
	const XPoly id = XPoly::monomial(1, RatFuncQ(1));
	return run_trials(
	    "jackson", {{"degree", std::to_string(max_degree)}, {"seed", std::to_string(seed)}}, trials, [&] {
		    const XPoly f0 = random_xpoly(rng, max_degree, true);
		    const XPoly g0 = random_xpoly(rng, max_degree, true);
		    // weight 1 for P_q
		    XPoly lhs = p_q(f0) * p_q(g0);
		    XPoly rhs = p_q(f0 * p_q(g0)) + p_q(p_q(f0) * g0) + p_q(f0 * g0);
		    if (!(lhs == rhs))
			    return std::tuple{lhs, rhs, std::string("P_q weight 1")};
		    // weight -1 for id + P_q
		    lhs = p_hat_q(f0) * p_hat_q(g0);
		    rhs = p_hat_q(f0 * p_hat_q(g0)) + p_hat_q(p_hat_q(f0) * g0) - p_hat_q(f0 * g0);
		    if (!(lhs == rhs))
			    return std::tuple{lhs, rhs, std::string("P_hat_q weight -1")};
		    // J[f]J[g] + (1-q) J[f g id] = J[J[f] g + f J[g]] on arbitrary polynomials
		    const XPoly f = random_xpoly(rng, max_degree, false);
		    const XPoly g = random_xpoly(rng, max_degree, false);
		    if (!(jackson_j(f) == p_hat_q(multiply_by_x(f)).scaled(one_minus_q)))
			    return std::tuple{jackson_j(f), p_hat_q(multiply_by_x(f)).scaled(one_minus_q),
			                      std::string("J = (1-q) P_hat_q M_x")};
		    lhs = jackson_j(f) * jackson_j(g) + jackson_j(f * g * id).scaled(one_minus_q);
		    rhs = jackson_j(jackson_j(f) * g + f * jackson_j(g));
		    return std::tuple{lhs, rhs, std::string("Jackson integral relation")};
	    },
	    [](const XPoly &f) { return to_string(f); });
}

} // namespace rbx
