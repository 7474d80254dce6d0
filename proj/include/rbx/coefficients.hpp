#ifndef RBX_COEFFICIENTS_HPP
#define RBX_COEFFICIENTS_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace rbx
{

// Arbitrary precision integers and reduced rationals. mpq_class keeps the
// denominator positive and the fraction reduced as long as every value goes
// through make_rational() or mpq arithmetic (which canonicalizes itself).
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer &num, const Integer &den);
Rational make_rational(long num, long den = 1);

std::string to_string(const Integer &v);
std::string to_string(const Rational &v);
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational &v) { return sgn(v) == 0; }

// Dense univariate polynomial over a field C. Coefficient i multiplies var^i.
// The zero polynomial has no coefficients and degree() == -1.
template <typename C>
class DensePoly
{
public:
	DensePoly() = default;
	DensePoly(const C &c)
	{
		if (!is_zero(c))
			coeffs_.push_back(c);
	}
	DensePoly(C &&c)
	{
		if (!is_zero(c))
			coeffs_.push_back(std::move(c));
	}
	explicit DensePoly(std::vector<C> coeffs)
	    : coeffs_(std::make_move_iterator(coeffs.begin()), std::make_move_iterator(coeffs.end()))
	{
		trim();
	}
	DensePoly(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }

	DensePoly(std::in_place_t, long v)
	{
		if (v != 0)
			coeffs_.emplace_back(v);
	}

	static DensePoly monomial(std::size_t deg, const C &c)
	{
		if (is_zero(c))
			return {};
		std::vector<C> v(deg + 1, C(0));
		v[deg] = c;
		return DensePoly(std::move(v));
	}

	int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
	bool zero() const { return coeffs_.empty(); }
	bool is_constant() const { return coeffs_.size() <= 1; }
	const auto &coefficients() const { return coeffs_; }

	C coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }
	C leading() const { return coeffs_.empty() ? C(0) : coeffs_.back(); }

	friend bool operator==(const DensePoly &a, const DensePoly &b) { return a.coeffs_ == b.coeffs_; }

	DensePoly &operator+=(const DensePoly &o)
	{
		if (o.coeffs_.size() > coeffs_.size())
			coeffs_.resize(o.coeffs_.size(), C(0));
		for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
			coeffs_[i] += o.coeffs_[i];
		trim();
		return *this;
	}
	DensePoly &operator-=(const DensePoly &o)
	{
		if (o.coeffs_.size() > coeffs_.size())
			coeffs_.resize(o.coeffs_.size(), C(0));
		for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
			coeffs_[i] -= o.coeffs_[i];
		trim();
		return *this;
	}
	DensePoly operator-() const
	{
		DensePoly r = *this;
		for (auto &c : r.coeffs_)
			c = -c;
		return r;
	}
	friend DensePoly operator+(DensePoly a, const DensePoly &b) { return a += b; }
	friend DensePoly operator-(DensePoly a, const DensePoly &b) { return a -= b; }

	friend DensePoly operator*(const DensePoly &a, const DensePoly &b)
	{
		if (a.zero() || b.zero())
			return {};
		if (b.coeffs_.size() == 1)
			return a.scaled(b.coeffs_[0]);
		if (a.coeffs_.size() == 1)
			return b.scaled(a.coeffs_[0]);
		std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
		for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
		{
			if (is_zero(a.coeffs_[i]))
				continue;
			for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
				r[i + j] += a.coeffs_[i] * b.coeffs_[j];
		}
		return DensePoly(std::move(r));
	}
	DensePoly &operator*=(const DensePoly &o) { return *this = *this * o; }

	DensePoly scaled(const C &c) const
	{
		if (is_zero(c))
			return {};
		DensePoly r = *this;
		for (auto &x : r.coeffs_)
			x *= c;
		r.trim();
		return r;
	}

	// Multiplication by var^k.
	DensePoly shifted(std::size_t k) const
	{
		if (zero())
			return {};
		std::vector<C> v(k, C(0));
		v.insert(v.end(), coeffs_.begin(), coeffs_.end());
		return DensePoly(std::move(v));
	}

	// Euclidean division; throws on division by the zero polynomial.
	std::pair<DensePoly, DensePoly> divmod(const DensePoly &d) const
	{
		if (d.zero())
			throw std::domain_error("polynomial division by zero");
		DensePoly q;
		DensePoly r = *this;
		const C lead = d.leading();
		while (!r.zero() && r.degree() >= d.degree())
		{
			const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
			C c = r.leading() / lead;
			DensePoly t = monomial(shift, c);
			q += t;
			r -= d.shifted(shift).scaled(c);
		}
		return {std::move(q), std::move(r)};
	}

	DensePoly monic() const { return zero() ? *this : scaled(C(1) / leading()); }

	template <typename V>
	V evaluate(const V &at) const
	{
		V acc(0);
		for (std::size_t i = coeffs_.size(); i-- > 0;)
			acc = acc * at + convert<V>(coeffs_[i]);
		return acc;
	}

	template <typename V>
	static V convert(const C &c);

private:
	void trim()
	{
		while (!coeffs_.empty() && is_zero(coeffs_.back()))
			coeffs_.pop_back();
	}

	boost::container::small_vector<C, 1> coeffs_;
};

template <typename C>
DensePoly<C> poly_gcd(DensePoly<C> a, DensePoly<C> b)
{
	while (!b.zero())
	{
		auto r = a.divmod(b).second;
		a = std::move(b);
		b = std::move(r);
	}
	return a.monic();
}

// Polynomials in the formal parameter q with rational coefficients.
using PolyQ = DensePoly<Rational>;

inline bool is_zero(const PolyQ &p) { return p.zero(); }

std::string to_string(const PolyQ &p, std::string_view var = "q");
PolyQ parse_poly(std::string_view text, std::string_view var = "q");

// 1 - q^k
PolyQ one_minus_q_pow(std::size_t k);

// Reduced rational function num/den in q; den is monic and coprime to num.
class RatFuncQ
{
public:
	RatFuncQ() : den_(Rational(1)) {}
	RatFuncQ(const Rational &c) : num_(c), den_(Rational(1)) {}
	RatFuncQ(long c) : RatFuncQ(Rational(c)) {}
	RatFuncQ(const PolyQ &p) : num_(p), den_(Rational(1)) {}

	const PolyQ &numerator() const { return num_; }
	const PolyQ &denominator() const { return den_; }
	bool zero() const { return num_.zero(); }

	friend RatFuncQ ratfunc_normalize(const PolyQ &n, const PolyQ &d);

	friend bool operator==(const RatFuncQ &a, const RatFuncQ &b) { return a.num_ == b.num_ && a.den_ == b.den_; }

	friend RatFuncQ operator+(const RatFuncQ &a, const RatFuncQ &b);
	friend RatFuncQ operator-(const RatFuncQ &a, const RatFuncQ &b);
	friend RatFuncQ operator*(const RatFuncQ &a, const RatFuncQ &b);
	friend RatFuncQ operator/(const RatFuncQ &a, const RatFuncQ &b);
	RatFuncQ operator-() const;
	RatFuncQ &operator+=(const RatFuncQ &o) { return *this = *this + o; }
	RatFuncQ &operator-=(const RatFuncQ &o) { return *this = *this - o; }
	RatFuncQ &operator*=(const RatFuncQ &o) { return *this = *this * o; }
	RatFuncQ &operator/=(const RatFuncQ &o) { return *this = *this / o; }

	double evaluate(double q) const;
	Rational evaluate(const Rational &q) const;

private:
	PolyQ num_;
	PolyQ den_;
};

RatFuncQ ratfunc_normalize(const PolyQ &n, const PolyQ &d);

inline bool is_zero(const RatFuncQ &r) { return r.zero(); }

std::string to_string(const RatFuncQ &r);
RatFuncQ parse_ratfunc(std::string_view text);

template <>
template <>
inline double DensePoly<Rational>::convert<double>(const Rational &c)
{
	return c.get_d();
}

template <>
template <>
inline Rational DensePoly<Rational>::convert<Rational>(const Rational &c)
{
	return c;
}

} // namespace rbx

#endif
