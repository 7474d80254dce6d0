#ifndef RBX_OPERATOR_GALLERY_HPP
#define RBX_OPERATOR_GALLERY_HPP

#include <vector>

#include "rbx/coefficients.hpp"

namespace rbx
{

// Values f(1), ..., f(W) of a map N -> Q on a finite window, W >= 2.
class FiniteSequence
{
public:
	explicit FiniteSequence(std::vector<Rational> values);

	std::size_t window() const { return values_.size(); }
	// 1-based, as in f(k)
	const Rational &operator()(std::size_t k) const { return values_.at(k - 1); }
	const std::vector<Rational> &values() const { return values_; }

	friend FiniteSequence operator*(const FiniteSequence &f, const FiniteSequence &g);
	friend FiniteSequence operator+(const FiniteSequence &f, const FiniteSequence &g);
	friend bool operator==(const FiniteSequence &f, const FiniteSequence &g) { return f.values_ == g.values_; }

private:
	std::vector<Rational> values_;
};

// Z[f](k) = f(1) + ... + f(k-1); Z[f](1) = 0. Weight 1.
FiniteSequence z_apply(const FiniteSequence &f);

// Polynomials in x over Q.
using RationalPoly = DensePoly<Rational>;

// I(x^m) = x^(m+1) / (m+1). Weight 0.
RationalPoly integrate(const RationalPoly &f);

// Polynomials in x with coefficients in Q(q).
using XPoly = DensePoly<RatFuncQ>;

std::string to_string(const XPoly &f);

// f(x) -> x f(x)
XPoly multiply_by_x(const XPoly &f);

// P_q[f](x) = sum_{n > 0} f(x q^n): x^m -> q^m / (1 - q^m) x^m. Needs f(0) = 0.
XPoly p_q(const XPoly &f);
// id + P_q: x^m -> x^m / (1 - q^m). Needs f(0) = 0.
XPoly p_hat_q(const XPoly &f);
// Jackson integral (1 - q) sum_{n >= 0} f(x q^n) x q^n:
// x^m -> (1 - q) / (1 - q^(m+1)) x^(m+1).
XPoly jackson_j(const XPoly &f);

} // namespace rbx

#endif
