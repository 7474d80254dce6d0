#include "rbx/operator_gallery.hpp"

#include <stdexcept>

namespace rbx
{

FiniteSequence::FiniteSequence(std::vector<Rational> values) : values_(std::move(values))
{
	if (values_.size() < 2)
		throw std::invalid_argument("finite sequence window must be >= 2");
}

FiniteSequence operator*(const FiniteSequence &f, const FiniteSequence &g)
{
	if (f.window() != g.window())
		throw std::invalid_argument("sequence windows differ");
	std::vector<Rational> out(f.window());
	for (std::size_t i = 0; i < out.size(); ++i)
		out[i] = f.values_[i] * g.values_[i];
	return FiniteSequence(std::move(out));
}

FiniteSequence operator+(const FiniteSequence &f, const FiniteSequence &g)
{
	if (f.window() != g.window())
		throw std::invalid_argument("sequence windows differ");
	std::vector<Rational> out(f.window());
	for (std::size_t i = 0; i < out.size(); ++i)
		out[i] = f.values_[i] + g.values_[i];
	return FiniteSequence(std::move(out));
}

FiniteSequence z_apply(const FiniteSequence &f)
{
	std::vector<Rational> out(f.window());
	Rational running = 0;
	for (std::size_t k = 1; k <= out.size(); ++k)
	{
		out[k - 1] = running;
		running += f(k);
	}
	return FiniteSequence(std::move(out));
}

RationalPoly integrate(const RationalPoly &f)
{
	std::vector<Rational> out(f.coefficients().size() + 1, Rational(0));
	for (std::size_t m = 0; m < f.coefficients().size(); ++m)
		out[m + 1] = f.coefficients()[m] / Rational(static_cast<long>(m + 1));
	return RationalPoly(std::move(out));
}

std::string to_string(const XPoly &f)
{
	if (f.zero())
		return "0";
	std::string out;
	bool first = true;
	for (std::size_t m = 0; m < f.coefficients().size(); ++m)
	{
		const RatFuncQ &c = f.coefficients()[m];
		if (c.zero())
			continue;
		std::string term = "(" + to_string(c) + ")";
		if (m == 1)
			term += "*x";
		else if (m > 1)
			term += "*x^" + std::to_string(m);
		out += (first ? "" : " + ") + term;
		first = false;
	}
	return out;
}

XPoly multiply_by_x(const XPoly &f) { return f.shifted(1); }

namespace
{

void require_no_constant(const XPoly &f, const char *what)
{
	if (!f.zero() && !f.coefficients()[0].zero())
		throw std::domain_error(std::string(what) + ": constant term must vanish (the defining series diverges)");
}

// Applies x^m -> factor(m) x^(m + shift) termwise.
template <typename Factor>
XPoly diagonal(const XPoly &f, std::size_t shift, Factor &&factor)
{
	std::vector<RatFuncQ> out(f.coefficients().size() + shift, RatFuncQ());
	for (std::size_t m = 0; m < f.coefficients().size(); ++m)
	{
		const RatFuncQ &c = f.coefficients()[m];
		if (!c.zero())
			out[m + shift] = c * factor(m);
	}
	return XPoly(std::move(out));
}

} // namespace

XPoly p_q(const XPoly &f)
{
	require_no_constant(f, "p_q");
	return diagonal(f, 0, [](std::size_t m) {
		return ratfunc_normalize(PolyQ::monomial(m, Rational(1)), one_minus_q_pow(m));
	});
}

XPoly p_hat_q(const XPoly &f)
{
	require_no_constant(f, "p_hat_q");
	return diagonal(f, 0, [](std::size_t m) { return ratfunc_normalize(PolyQ(Rational(1)), one_minus_q_pow(m)); });
}

XPoly jackson_j(const XPoly &f)
{
	return diagonal(f, 1, [](std::size_t m) { return ratfunc_normalize(one_minus_q_pow(1), one_minus_q_pow(m + 1)); });
}

} // namespace rbx
