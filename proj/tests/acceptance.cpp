// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "rbx/identity_engine.hpp"
#include "rbx/mzv_calculus.hpp"
#include "rbx/numeric_eval.hpp"
#include "rbx/rbx.h"

using namespace rbx;

namespace
{

struct Outcome
{
	bool pass = true;
	std::string detail;

	void require(bool ok, const std::string &what)
	{
		if (!ok)
		{
			pass = false;
			if (!detail.empty())
				detail += "; ";
			detail += what;
		}
	}
};

Composition C(std::vector<int> p) { return Composition(std::move(p)); }

EvalConfig at_n(std::int64_t n)
{
	EvalConfig cfg;
	cfg.N = n;
	return cfg;
}

double z(const std::vector<int> &p, const EvalConfig &cfg) { return zeta_num(C(p), cfg).value; }

std::string sci(double v)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.2e", v);
	return buf;
}

std::vector<Word> composition_words(int max_len, int max_part)
{
	std::vector<Word> out;
	std::function<void(Word &)> rec = [&](Word &w) {
		if (!w.empty())
			out.push_back(w);
		if (static_cast<int>(w.size()) == max_len)
			return;
		for (int s = 1; s <= max_part; ++s)
		{
			w.push_back(Letter::composition(s));
			rec(w);
			w.pop_back();
		}
	};
	Word w;
	rec(w);
	return out;
}

std::vector<Composition> admissible_compositions(int max_weight)
{
	std::vector<Composition> out;
	std::vector<int> parts;
	std::function<void(int)> rec = [&](int left) {
		if (!parts.empty() && parts.front() >= 2)
			out.push_back(C(parts));
		for (int s = parts.empty() ? 2 : 1; s <= left; ++s)
		{
			parts.push_back(s);
			rec(left - s);
			parts.pop_back();
		}
	};
	rec(max_weight);
	return out;
}

ZetaCombo combo(std::initializer_list<std::pair<std::vector<int>, long>> terms)
{
	ZetaCombo out;
	for (const auto &[p, c] : terms)
		out[C(p)] += Rational(c);
	return out;
}

Outcome quasi_shuffle_coincidence()
{
	Outcome o;
	const auto words = composition_words(4, 4);
	const Scalar one(Rational(1));
	std::size_t pairs = 0, mismatches = 0;
	for (const auto &a : words)
		for (const auto &b : words)
		{
			++pairs;
			if (!(mixable_shuffle(a, b, one) == quasi_shuffle(a, b)))
				++mismatches;
		}
	o.require(mismatches == 0, std::to_string(mismatches) + " mismatching pairs");
	o.detail = o.pass ? std::to_string(pairs) + " word pairs" : o.detail;
	return o;
}

Outcome rb_axiom()
{
	Outcome o;
	const std::pair<long, std::uint64_t> cases[] = {{0, 101}, {1, 202}, {-1, 303}};
	for (const auto &[lambda, seed] : cases)
	{
		const auto r = rb_axiom_check(Scalar(Rational(lambda)), 200, seed);
		o.require(r.equal, "weight " + std::to_string(lambda) + ": " + r.first_diff.value_or(""));
	}
	if (o.pass)
		o.detail = "200 pairs at each of 0, 1, -1";
	return o;
}

Outcome stuffle_product()
{
	Outcome o;
	o.require(stuffle(C({2}), C({2})) == combo({{{2, 2}, 2}, {{4}, 1}}), "stuffle(2,2) != 2 zeta(2,2) + zeta(4)");

	rbx_context *ctx = rbx_context_new();
	o.require(rbx_product(ctx, RBX_PRODUCT_STUFFLE, nullptr, "2", "2") == RBX_OK, "product call failed");
	const std::string json = rbx_result_json(ctx);
	o.require(json.find("{\"coef\":\"2\",\"composition\":[2,2]}") != std::string::npos &&
	              json.find("{\"coef\":\"1\",\"composition\":[4]}") != std::string::npos,
	          "product JSON: " + json);
	rbx_context_free(ctx);

	const auto cfg = at_n(100000);
	const double res = std::fabs(z({2}, cfg) * z({2}, cfg) - 2 * z({2, 2}, cfg) - z({4}, cfg));
	o.require(res < 1e-4, "residual " + sci(res));
	if (o.pass)
		o.detail = "residual " + sci(res);
	return o;
}

Outcome shuffle_product()
{
	Outcome o;
	o.require(shuffle_zeta(C({2}), C({2})) == combo({{{3, 1}, 4}, {{2, 2}, 2}}), "shuffle(2,2) != 4 zeta(3,1) + 2 zeta(2,2)");
	if (o.pass)
		o.detail = "4 zeta(3,1) + 2 zeta(2,2)";
	return o;
}

Outcome double_shuffle()
{
	Outcome o;
	const auto r = double_shuffle_relation(C({2}), C({2}));
	const ZetaPolynomial expected =
	    ZetaPolynomial::symbol(C({3, 1})) - ZetaPolynomial::symbol(C({4})) * make_rational(1, 4);
	o.require(r.terms == expected, "relation " + to_string(r.terms));
	const double res = eval_relation(r, at_n(100000));
	o.require(res < 1e-4, "residual " + sci(res));
	if (o.pass)
		o.detail = to_string(r.terms) + " = 0, residual " + sci(res);
	return o;
}

Outcome spitzer()
{
	Outcome o;
	const auto r = spitzer_check(6);
	o.require(r.equal, "order 6: " + r.first_diff.value_or(""));
	const auto cfg = at_n(100000);
	const double res = std::fabs(z({2, 2}, cfg) - 0.5 * z({2}, cfg) * z({2}, cfg) + 0.5 * z({4}, cfg));
	o.require(res < 1e-4, "residual " + sci(res));
	if (o.pass)
		o.detail = "equal through t^6, residual " + sci(res);
	return o;
}

Outcome exp_star()
{
	Outcome o;
	const auto r = exp_star_log_check(5);
	o.require(r.equal, r.first_diff.value_or(""));
	if (o.pass)
		o.detail = "equal through t^5";
	return o;
}

Outcome bohnenblust()
{
	Outcome o;
	for (int n = 2; n <= 4; ++n)
	{
		const auto r = bohnenblust_spitzer_check(n);
		o.require(r.equal, "n=" + std::to_string(n) + ": " + r.first_diff.value_or(""));
		if (n == 4)
			o.require(r.params.at("permutations") == "24" && r.params.at("partitions") == "15", "n=4 counts");
	}
	const double res = eval_relation(hoffman_partition_relation({2, 3, 4}), at_n(100000));
	o.require(res < 1e-4, "partition relation residual " + sci(res));
	if (o.pass)
		o.detail = "n = 2, 3, 4 equal; (2,3,4) residual " + sci(res);
	return o;
}

Outcome freshman()
{
	Outcome o;
	std::size_t checked = 0;
	for (int p : {2, 3, 5})
		for (const auto &w : composition_words(2, 4))
		{
			++checked;
			const auto r = congruence_check(w, p);
			o.require(r.equal, "p=" + std::to_string(p) + " word " + to_string(w));
		}
	const auto cube = congruence_zeta_relation(C({2}), 3);
	ZetaCombo reduced;
	for (const auto &[c, coef] : cube.expansion)
	{
		o.require(coef.get_den() == 1, "non-integral coefficient");
		Integer r = coef.get_num() % 3;
		if (r < 0)
			r += 3;
		if (r != 0)
			reduced[c] = Rational(r);
	}
	o.require(reduced == combo({{{6}, 1}}), "zeta(2)^3 mod 3 leaves " + to_string(reduced));
	if (o.pass)
		o.detail = std::to_string(checked) + " (word, p) cases; zeta(2)^3 = zeta(6) mod 3";
	return o;
}

Outcome q_stuffle()
{
	Outcome o;
	EvalConfig cfg;
	cfg.q = make_rational(1, 2);
	cfg.K = 200;
	auto zq = [&](std::vector<int> p) { return qmzv_num(C(std::move(p)), cfg).value; };
	const double res =
	    std::fabs(zq({2}) * zq({3}) - zq({2, 3}) - zq({3, 2}) - zq({5}) - (1 - 0.5) * zq({4}));
	o.require(res < 1e-10, "residual " + sci(res));
	if (o.pass)
		o.detail = "residual " + sci(res);
	return o;
}

Outcome operators()
{
	Outcome o;
	const auto zr = z_rb_check(50, 50, 11);
	o.require(zr.equal, "Z: " + zr.first_diff.value_or(""));
	const auto ir = integration_check(6, 50, 12);
	o.require(ir.equal, "I: " + ir.first_diff.value_or(""));
	const auto jr = jackson_check(5, 30, 13);
	o.require(jr.equal, "Jackson: " + jr.first_diff.value_or(""));
	if (o.pass)
		o.detail = "Z, I, P_q, P_hat_q, J exact";
	return o;
}

Outcome oracle_equivalence()
{
	Outcome o;
	double worst = 0;
	std::size_t cases = 0;
	for (const auto &c : admissible_compositions(6))
		for (std::int64_t N : {10, 50, 100})
		{
			const double exact = nested_sum_oracle(c, N).get_d();
			const double err = std::fabs(zeta_num(c, at_n(N)).value - exact) / exact;
			worst = std::max(worst, err);
			++cases;
			o.require(err <= 1e-12, "zeta(" + to_string(c) + ") at N=" + std::to_string(N) + " rel err " + sci(err));
		}

	auto cfg = at_n(100000);
	cfg.compensated = true;
	std::map<Composition, EvalResult> cache;
	auto value = [&](const Composition &c) -> const EvalResult & {
		auto it = cache.find(c);
		if (it == cache.end())
			it = cache.emplace(c, zeta_num(c, cfg)).first;
		return it->second;
	};
	const auto comps = admissible_compositions(5);
	std::size_t pairs = 0;
	double worst_hom = 0;
	for (std::size_t i = 0; i < comps.size(); ++i)
		for (std::size_t j = i; j < comps.size(); ++j)
		{
			const auto &a = comps[i];
			const auto &b = comps[j];
			double sum = 0, bound = value(a).tail_bound * value(b).value + value(b).tail_bound * value(a).value;
			// rounding of the values and of this sum, a few ulps per term
			double magnitude = std::fabs(value(a).value * value(b).value);
			std::size_t terms = 0;
			for (const auto &[c, coef] : stuffle(a, b))
			{
				sum += coef.get_d() * value(c).value;
				bound += std::fabs(coef.get_d()) * value(c).tail_bound;
				magnitude += std::fabs(coef.get_d() * value(c).value);
				++terms;
			}
			bound += static_cast<double>(terms + 3) * std::numeric_limits<double>::epsilon() * magnitude;
			const double res = std::fabs(value(a).value * value(b).value - sum);
			worst_hom = std::max(worst_hom, res);
			++pairs;
			o.require(res <= bound, "stuffle(" + to_string(a) + "|" + to_string(b) + ") residual " + sci(res) +
			                            " > bound " + sci(bound));
		}
	if (o.pass)
		o.detail = std::to_string(cases) + " oracle cases, worst rel err " + sci(worst) + "; " + std::to_string(pairs) +
		           " stuffle pairs, worst residual " + sci(worst_hom);
	return o;
}

} // namespace

int main()
{
	struct Criterion
	{
		const char *name;
		Outcome (*run)();
		double budget; // seconds, 0 for none
	};
	const Criterion criteria[] = {
	    {"quasi-shuffle coincides with the weight-1 mixable shuffle", quasi_shuffle_coincidence, 10},
	    {"Rota-Baxter axiom on Sha(A)", rb_axiom, 10},
	    {"stuffle of (2) and (2)", stuffle_product, 1},
	    {"shuffle of (2) and (2)", shuffle_product, 0},
	    {"double shuffle gives zeta(3,1) = zeta(4)/4", double_shuffle, 0},
	    {"Spitzer identity and zeta(2,2)", spitzer, 60},
	    {"exp-star of log", exp_star, 0},
	    {"Bohnenblust-Spitzer and the partition relation", bohnenblust, 60},
	    {"freshman's dream congruence", freshman, 30},
	    {"q-MZV stuffle", q_stuffle, 1},
	    {"operator gallery", operators, 10},
	    {"oracle equivalence and stuffle homomorphism", oracle_equivalence, 0},
	};

	int failed = 0;
	int index = 0;
	for (const auto &c : criteria)
	{
		++index;
		const auto start = std::chrono::steady_clock::now();
		Outcome o;
		try
		{
			o = c.run();
		}
		catch (const std::exception &e)
		{
			o.pass = false;
			o.detail = std::string("exception: ") + e.what();
		}
		const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		if (c.budget > 0 && secs > c.budget)
		{
			o.pass = false;
			char over[64];
			std::snprintf(over, sizeof over, "; over the %.0f s budget", c.budget);
			o.detail += over;
		}
		std::printf("%s  %2d  %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
		failed += !o.pass;
	}
	std::printf("%d of %d criteria passed\n", index - failed, index);
	return failed ? 1 : 0;
}
