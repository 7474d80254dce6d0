#ifndef RBX_NUMERIC_EVAL_HPP
#define RBX_NUMERIC_EVAL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>

#include "rbx/coefficients.hpp"
#include "rbx/mzv_calculus.hpp"

namespace rbx
{

// Truncation bound used when nothing else is configured: RBX_DEFAULT_N if set
// to a valid integer >= 10, otherwise 100000.
std::int64_t default_truncation();

struct EvalConfig
{
	std::int64_t N = default_truncation(); // outer index bound for sums over n
	Rational x = 0;                         // Hurwitz offset, >= 0
	Rational q = Rational(1, 2);            // q-MZV parameter in (0, 1)
	std::int64_t K = 400;                   // outer index bound for q-MZVs
	bool compensated = false;               // Neumaier summation

	void validate() const;
};

struct EvalResult
{
	double value = 0;
	double tail_bound = 0;
};

struct ComplexEvalResult
{
	std::complex<double> value;
	double tail_bound = 0;
};

// sum_{N >= n1 > ... > nk >= 1} prod (x + n_i)^(-s_i), in O(k N).
EvalResult zeta_num(const Composition &s, const EvalConfig &cfg);

// Truncated multiple polylogarithm / Lerch value
// sum z1^n1 ... zk^nk / prod (x + n_i)^s_i.
ComplexEvalResult mpl_num(const Composition &s, std::span<const std::complex<double>> z, const EvalConfig &cfg);

// Polylog letters with formal z-exponents, bound to numbers through
// symbol_values (symbol i is z_{i+1}).
ComplexEvalResult mpl_num(const Word &letters, std::span<const std::complex<double>> symbol_values,
                          const EvalConfig &cfg);

// sum_{K >= k1 > ... > kd > 0} q^(sum k_i (s_i - 1)) / prod [k_i]_q^s_i
EvalResult qmzv_num(const Composition &s, const EvalConfig &cfg);

// |sum coef * prod zeta_num(factor)| over the relation's terms.
double eval_relation(const Relation &r, const EvalConfig &cfg);

// Sum of |coef| times the tail bounds of each monomial's factors (product
// rule to first order).
double relation_tail_bound(const Relation &r, const EvalConfig &cfg);

// Exact value of the truncated nested sum by a naive k-fold loop.
// N <= 200; cost O(N^k).
Rational nested_sum_oracle(const Composition &s, std::int64_t N, const Rational &x = 0);

} // namespace rbx

#endif
