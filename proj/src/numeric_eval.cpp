#include "rbx/numeric_eval.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbx
{

std::int64_t default_truncation()
{
	if (const char *env = std::getenv("RBX_DEFAULT_N"))
	{
		char *end = nullptr;
		const long long v = std::strtoll(env, &end, 10);
		if (end != env && *end == '\0' && v >= 10)
			return v;
	}
	return 100000;
}

void EvalConfig::validate() const
{
	if (N < 10)
		throw std::invalid_argument("truncation N must be >= 10");
	if (K < 1)
		throw std::invalid_argument("q-truncation K must be >= 1");
	if (sgn(x) < 0)
		throw std::invalid_argument("offset x must be >= 0");
	if (sgn(q) <= 0 || q >= 1)
		throw std::invalid_argument("q must lie in (0, 1)");
}

namespace
{

// Plain or Neumaier-compensated running sum.
class Accumulator
{
public:
	explicit Accumulator(bool compensated) : compensated_(compensated) {}

	void add(double v)
	{
		if (!compensated_)
		{
			sum_ += v;
			return;
		}
		const double t = sum_ + v;
		if (std::fabs(sum_) >= std::fabs(v))
			carry_ += (sum_ - t) + v;
		else
			carry_ += (v - t) + sum_;
		sum_ = t;
	}
	double value() const { return sum_ + carry_; }

private:
	bool compensated_;
	double sum_ = 0;
	double carry_ = 0;
};

class ComplexAccumulator
{
public:
	explicit ComplexAccumulator(bool compensated) : re_(compensated), im_(compensated) {}
	void add(std::complex<double> v)
	{
		re_.add(v.real());
		im_.add(v.imag());
	}
	std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
	Accumulator re_;
	Accumulator im_;
};

template <typename T>
struct AccumulatorFor;
template <>
struct AccumulatorFor<double>
{
	using type = Accumulator;
};
template <>
struct AccumulatorFor<std::complex<double>>
{
	using type = ComplexAccumulator;
};

// Partial-sum recursion for sum_{N >= n_0 > n_1 > ... > n_{k-1} >= 1}
// prod term(j, n_j). Level j keeps S_j(n) = sum_{m <= n} term(j, m) S_{j+1}(m - 1),
// S_k = 1, so each level costs one pass over 1..N.
template <typename T, typename Term>
T nested_sum(std::size_t depth, std::int64_t N, const Term &term, bool compensated)
{
	const auto len = static_cast<std::size_t>(N) + 1;
	std::vector<T> inner(len, T(1));
	std::vector<T> outer(len, T(0));
	for (std::size_t j = depth; j-- > 0;)
	{
		typename AccumulatorFor<T>::type acc(compensated);
		outer[0] = T(0);
		for (std::size_t n = 1; n < len; ++n)
		{
			acc.add(term(j, static_cast<std::int64_t>(n)) * inner[n - 1]);
			outer[n] = acc.value();
		}
		std::swap(inner, outer);
	}
	return inner[len - 1];
}

double inverse_power(double base, int s) { return 1.0 / std::pow(base, s); }

// Heuristic bound on the part of the sum with n_1 > N, given the outermost
// exponent and bounds on the inner sums.
double zeta_tail(const std::vector<int> &parts, double N, double x)
{
	const double s1 = parts.front();
	double inner = 2.0;
	for (std::size_t i = 1; i < parts.size(); ++i)
		inner *= parts[i] >= 2 ? parts[i] / (parts[i] - 1.0) : 1.0 + std::log(N + x + 1.0);
	return inner / ((s1 - 1.0) * std::pow(N + x, s1 - 1.0));
}

void require_convergent(const Composition &s, const char *what)
{
	if (!s.admissible())
		throw std::domain_error(std::string(what) + ": zeta(" + to_string(s) + ") diverges (first part must be >= 2)");
}

} // namespace

EvalResult zeta_num(const Composition &s, const EvalConfig &cfg)
{
	cfg.validate();
	require_convergent(s, "zeta_num");
	const double x = cfg.x.get_d();
	const auto &parts = s.parts();
	auto term = [&](std::size_t j, std::int64_t n) { return inverse_power(x + static_cast<double>(n), parts[j]); };
	EvalResult r;
	r.value = nested_sum<double>(parts.size(), cfg.N, term, cfg.compensated);
	r.tail_bound = zeta_tail(parts, static_cast<double>(cfg.N), x);
	return r;
}

ComplexEvalResult mpl_num(const Composition &s, std::span<const std::complex<double>> z, const EvalConfig &cfg)
{
	cfg.validate();
	const auto &parts = s.parts();
	if (z.size() != parts.size())
		throw std::invalid_argument("mpl_num: need one z per composition part");
	for (std::size_t i = 1; i < z.size(); ++i)
		if (std::abs(z[i]) > 1.0)
			throw std::domain_error("mpl_num: |z_i| must be <= 1");
	const double r1 = std::abs(z[0]);
	if (r1 > 1.0 || (r1 == 1.0 && parts[0] < 2))
		throw std::domain_error("mpl_num: need |z1| < 1, or |z1| = 1 with s1 >= 2");

	const double x = cfg.x.get_d();
	const auto len = static_cast<std::size_t>(cfg.N) + 1;
	// z_j^n for n = 0..N
	std::vector<std::vector<std::complex<double>>> zpow(parts.size(), std::vector<std::complex<double>>(len));
	for (std::size_t j = 0; j < parts.size(); ++j)
	{
		zpow[j][0] = 1.0;
		for (std::size_t n = 1; n < len; ++n)
			zpow[j][n] = zpow[j][n - 1] * z[j];
	}
	auto term = [&](std::size_t j, std::int64_t n) {
		return zpow[j][static_cast<std::size_t>(n)] * inverse_power(x + static_cast<double>(n), parts[j]);
	};

	ComplexEvalResult r;
	r.value = nested_sum<std::complex<double>>(parts.size(), cfg.N, term, cfg.compensated);
	const double N = static_cast<double>(cfg.N);
	if (r1 < 1.0)
	{
		double inner = 2.0;
		for (std::size_t i = 1; i < parts.size(); ++i)
			inner *= parts[i] >= 2 ? parts[i] / (parts[i] - 1.0) : 1.0 + std::log(N + x + 1.0);
		r.tail_bound = inner * std::pow(r1, N + 1.0) / ((1.0 - r1) * std::pow(x + N + 1.0, parts[0]));
	}
	else
		r.tail_bound = zeta_tail(parts, N, x);
	return r;
}

ComplexEvalResult mpl_num(const Word &letters, std::span<const std::complex<double>> symbol_values,
                          const EvalConfig &cfg)
{
	std::vector<int> parts;
	std::vector<std::complex<double>> z;
	for (const auto &l : letters)
	{
		if (l.system != LetterSystem::polylog || l.unit)
			throw std::invalid_argument("mpl_num: expected polylog letters");
		parts.push_back(l.index);
		std::complex<double> v = 1.0;
		for (std::size_t i = 0; i < l.z.size(); ++i)
		{
			if (l.z[i] == 0)
				continue;
			if (i >= symbol_values.size())
				throw std::invalid_argument("mpl_num: no value bound for z" + std::to_string(i + 1));
			v *= std::pow(symbol_values[i], l.z[i]);
		}
		z.push_back(v);
	}
	return mpl_num(Composition(std::move(parts)), z, cfg);
}

EvalResult qmzv_num(const Composition &s, const EvalConfig &cfg)
{
	cfg.validate();
	require_convergent(s, "qmzv_num");
	const double q = cfg.q.get_d();
	const auto &parts = s.parts();
	const auto len = static_cast<std::size_t>(cfg.K) + 1;
	std::vector<double> qk(len, 1.0); // q^k
	std::vector<double> bracket(len, 0.0); // [k]_q
	for (std::size_t k = 1; k < len; ++k)
	{
		qk[k] = qk[k - 1] * q;
		bracket[k] = (1.0 - qk[k]) / (1.0 - q);
	}
	auto term = [&](std::size_t j, std::int64_t k) {
		const auto i = static_cast<std::size_t>(k);
		return std::pow(qk[i], parts[j] - 1) / std::pow(bracket[i], parts[j]);
	};

	EvalResult r;
	r.value = nested_sum<double>(parts.size(), cfg.K, term, cfg.compensated);
	const double K = static_cast<double>(cfg.K);
	double inner = 1.0;
	for (std::size_t i = 1; i < parts.size(); ++i)
		inner *= parts[i] >= 2 ? std::min(K, 1.0 / (1.0 - std::pow(q, parts[i] - 1))) : K;
	r.tail_bound = 2.0 * inner * std::pow(q, (K + 1.0) * (parts[0] - 1)) / (1.0 - std::pow(q, parts[0] - 1));
	return r;
}

namespace
{

class ZetaCache
{
public:
	explicit ZetaCache(const EvalConfig &cfg) : cfg_(cfg) {}
	const EvalResult &get(const Composition &c)
	{
		auto it = values_.find(c);
		if (it == values_.end())
			it = values_.emplace(c, zeta_num(c, cfg_)).first;
		return it->second;
	}

private:
	const EvalConfig &cfg_;
	std::map<Composition, EvalResult> values_;
};

void require_admissible_relation(const Relation &r)
{
	if (!r.admissible())
		throw std::domain_error("relation " + r.source + " contains a divergent zeta value");
}

} // namespace

double eval_relation(const Relation &r, const EvalConfig &cfg)
{
	require_admissible_relation(r);
	ZetaCache cache(cfg);
	Accumulator acc(cfg.compensated);
	for (const auto &[m, c] : r.terms.terms())
	{
		double v = c.get_d();
		for (const auto &f : m.factors())
			v *= cache.get(f).value;
		acc.add(v);
	}
	return std::fabs(acc.value());
}

double relation_tail_bound(const Relation &r, const EvalConfig &cfg)
{
	require_admissible_relation(r);
	ZetaCache cache(cfg);
	double bound = 0;
	for (const auto &[m, c] : r.terms.terms())
	{
		const auto &f = m.factors();
		double term = 0;
		for (std::size_t i = 0; i < f.size(); ++i)
		{
			double t = cache.get(f[i]).tail_bound;
			for (std::size_t j = 0; j < f.size(); ++j)
				if (j != i)
					t *= cache.get(f[j]).value + cache.get(f[j]).tail_bound;
			term += t;
		}
		bound += std::fabs(c.get_d()) * term;
	}
	return bound;
}

namespace
{

// Innermost level of the naive loop does acc += partial * weights[level][n].
void oracle_loop(const std::vector<std::vector<Integer>> &weights, std::size_t level, std::int64_t upper,
                 const Integer &partial, Integer &acc)
{
	const auto &w = weights[level];
	if (level + 1 == weights.size())
	{
		for (std::int64_t n = 1; n < upper; ++n)
			mpz_addmul(acc.get_mpz_t(), partial.get_mpz_t(), w[static_cast<std::size_t>(n)].get_mpz_t());
		return;
	}
	Integer next;
	for (std::int64_t n = 1; n < upper; ++n)
	{
		next = partial * w[static_cast<std::size_t>(n)];
		oracle_loop(weights, level + 1, n, next, acc);
	}
}

} // namespace

Rational nested_sum_oracle(const Composition &s, std::int64_t N, const Rational &x)
{
	if (N < 1 || N > 200)
		throw std::invalid_argument("nested_sum_oracle: N must be in [1, 200]");
	if (sgn(x) < 0)
		throw std::invalid_argument("nested_sum_oracle: x must be >= 0");

	// x + n = (a + b n) / b; scale every term by L^weight with L the lcm of
	// the numerators so the loop runs over integers.
	const Integer a = x.get_num();
	const Integer b = x.get_den();
	std::vector<Integer> d(static_cast<std::size_t>(N) + 1);
	Integer L = 1;
	for (std::int64_t n = 1; n <= N; ++n)
	{
		d[static_cast<std::size_t>(n)] = a + b * n;
		L = lcm(L, d[static_cast<std::size_t>(n)]);
	}

	const auto &parts = s.parts();
	std::vector<std::vector<Integer>> weights(parts.size(), std::vector<Integer>(static_cast<std::size_t>(N) + 1));
	for (std::size_t j = 0; j < parts.size(); ++j)
		for (std::int64_t n = 1; n <= N; ++n)
		{
			Integer ratio = L / d[static_cast<std::size_t>(n)];
			mpz_pow_ui(weights[j][static_cast<std::size_t>(n)].get_mpz_t(), ratio.get_mpz_t(),
			           static_cast<unsigned long>(parts[j]));
		}

	Integer acc = 0;
	oracle_loop(weights, 0, N + 1, Integer(1), acc);

	const auto w = static_cast<unsigned long>(s.weight());
	Integer num, den;
	mpz_pow_ui(num.get_mpz_t(), b.get_mpz_t(), w);
	num *= acc;
	mpz_pow_ui(den.get_mpz_t(), L.get_mpz_t(), w);
	return make_rational(num, den);
}

} // namespace rbx
