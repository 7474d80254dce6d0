#ifndef RBX_TRUNC_SERIES_HPP
#define RBX_TRUNC_SERIES_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rbx/coefficients.hpp"

namespace rbx
{

// Power series c_0 + c_1 t + ... + c_N t^N over a coefficient module C.
// Everything above t^N is dropped silently.
//
// C needs C + C, C - C, C * Rational and an is_zero(const C &) overload found
// by ADL. Multiplication of coefficients is supplied by the caller so that
// modules whose product depends on extra context (weights, alternative
// products) can be used.
template <typename C>
class TruncSeries
{
public:
	TruncSeries(std::size_t order, const C &zero) : coeffs_(order + 1, zero), zero_(zero) {}

	std::size_t order() const { return coeffs_.size() - 1; }
	const C &operator[](std::size_t i) const { return coeffs_.at(i); }
	C &operator[](std::size_t i) { return coeffs_.at(i); }
	const C &zero_value() const { return zero_; }
	const std::vector<C> &coefficients() const { return coeffs_; }

	TruncSeries &operator+=(const TruncSeries &o)
	{
		check_order(o);
		for (std::size_t i = 0; i < coeffs_.size(); ++i)
			coeffs_[i] = coeffs_[i] + o.coeffs_[i];
		return *this;
	}
	friend TruncSeries operator+(TruncSeries a, const TruncSeries &b) { return a += b; }

	TruncSeries scaled(const Rational &r) const
	{
		TruncSeries out = *this;
		for (auto &c : out.coeffs_)
			c = c * r;
		return out;
	}

	void check_order(const TruncSeries &o) const
	{
		if (o.order() != order())
			throw std::invalid_argument("truncated series of different orders");
	}

	friend bool operator==(const TruncSeries &a, const TruncSeries &b) { return a.coeffs_ == b.coeffs_; }

private:
	std::vector<C> coeffs_;
	C zero_;
};

// Cauchy product truncated at the common order.
template <typename C, typename Mul>
TruncSeries<C> series_mul(const TruncSeries<C> &a, const TruncSeries<C> &b, Mul &&mul)
{
	a.check_order(b);
	TruncSeries<C> out(a.order(), a.zero_value());
	for (std::size_t i = 0; i <= a.order(); ++i)
	{
		if (is_zero(a[i]))
			continue;
		for (std::size_t j = 0; i + j <= a.order(); ++j)
		{
			if (is_zero(b[j]))
				continue;
			out[i + j] = out[i + j] + mul(a[i], b[j]);
		}
	}
	return out;
}

template <typename C>
TruncSeries<C> series_mul(const TruncSeries<C> &a, const TruncSeries<C> &b)
{
	return series_mul(a, b, [](const C &x, const C &y) { return C(x * y); });
}

// exp(a) = sum a^n / n!, with a^0 = one. Requires a zero constant term.
template <typename C, typename Mul>
TruncSeries<C> series_exp(const TruncSeries<C> &a, Mul &&mul, const C &one)
{
	if (!is_zero(a[0]))
		throw std::domain_error("series_exp needs a zero constant term");
	TruncSeries<C> result(a.order(), a.zero_value());
	result[0] = one;
	TruncSeries<C> power = result;
	for (std::size_t n = 1; n <= a.order(); ++n)
	{
		power = series_mul(power, a, mul).scaled(Rational(1, n));
		result += power;
	}
	return result;
}

// log(1 + a) = sum (-1)^(n-1) a^n / n. Requires a zero constant term.
template <typename C, typename Mul>
TruncSeries<C> series_log1p(const TruncSeries<C> &a, Mul &&mul)
{
	if (!is_zero(a[0]))
		throw std::domain_error("series_log1p needs a zero constant term");
	TruncSeries<C> result(a.order(), a.zero_value());
	TruncSeries<C> power = a;
	for (std::size_t n = 1; n <= a.order(); ++n)
	{
		if (n > 1)
			power = series_mul(power, a, mul);
		result += power.scaled(Rational(n % 2 == 1 ? 1 : -1, n));
	}
	return result;
}

template <typename C>
TruncSeries<C> series_exp(const TruncSeries<C> &a)
{
	return series_exp(a, [](const C &x, const C &y) { return C(x * y); }, C(1));
}

template <typename C>
TruncSeries<C> series_log1p(const TruncSeries<C> &a)
{
	return series_log1p(a, [](const C &x, const C &y) { return C(x * y); });
}

} // namespace rbx

#endif
