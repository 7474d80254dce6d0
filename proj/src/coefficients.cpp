#include "rbx/coefficients.hpp"

#include <cctype>

namespace rbx
{

Rational make_rational(const Integer &num, const Integer &den)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	Rational r(num, den);
	r.canonicalize();
	return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Integer &v) { return v.get_str(); }

std::string to_string(const Rational &v) { return v.get_str(); }

namespace
{

std::string_view strip(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

bool is_integer_literal(std::string_view s)
{
	if (!s.empty() && (s.front() == '-' || s.front() == '+'))
		s.remove_prefix(1);
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
	auto s = strip(text);
	const auto slash = s.find('/');
	auto num = strip(s.substr(0, slash));
	if (!is_integer_literal(num))
		throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
	if (num.front() == '+')
		num.remove_prefix(1);
	Integer n(std::string(num), 10);
	if (slash == std::string_view::npos)
		return Rational(n);
	auto den = strip(s.substr(slash + 1));
	if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
		throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
	return make_rational(n, Integer(std::string(den), 10));
}

std::string to_string(const PolyQ &p, std::string_view var)
{
	if (p.zero())
		return "0";
	std::string out;
	bool first = true;
	const auto &c = p.coefficients();
	for (std::size_t k = 0; k < c.size(); ++k)
	{
		if (is_zero(c[k]))
			continue;
		const bool negative = sgn(c[k]) < 0;
		const Rational mag = abs(c[k]);
		std::string term;
		if (k == 0)
			term = to_string(mag);
		else
		{
			if (mag != 1)
				term = to_string(mag) + "*";
			term += var;
			if (k > 1)
				term += "^" + std::to_string(k);
		}
		if (first)
			out = (negative ? "-" : "") + term;
		else
			out += (negative ? " - " : " + ") + term;
		first = false;
	}
	return out;
}

PolyQ parse_poly(std::string_view text, std::string_view var)
{
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s.push_back(ch);
	if (s.empty())
		throw std::invalid_argument("empty polynomial");
	if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
		s = s.substr(1, s.size() - 2);

	PolyQ result;
	std::size_t pos = 0;
	while (pos < s.size())
	{
		std::size_t end = pos + 1;
		while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '^'))
			++end;
		std::string_view term(s.data() + pos, end - pos);
		pos = end;

		Rational sign(1);
		if (term.front() == '+' || term.front() == '-')
		{
			if (term.front() == '-')
				sign = -1;
			term.remove_prefix(1);
		}
		const auto vpos = term.find(var);
		Rational coef(1);
		std::size_t deg = 0;
		if (vpos == std::string_view::npos)
			coef = parse_rational(term);
		else
		{
			auto cpart = term.substr(0, vpos);
			if (!cpart.empty())
			{
				if (cpart.back() != '*')
					throw std::invalid_argument("malformed polynomial term: '" + std::string(term) + "'");
				cpart.remove_suffix(1);
				coef = parse_rational(cpart);
			}
			auto rest = term.substr(vpos + var.size());
			if (rest.empty())
				deg = 1;
			else if (rest.front() == '^' && is_integer_literal(rest.substr(1)) && rest[1] != '-')
				deg = std::stoul(std::string(rest.substr(1)));
			else
				throw std::invalid_argument("malformed polynomial term: '" + std::string(term) + "'");
		}
		result += PolyQ::monomial(deg, Rational(sign * coef));
	}
	return result;
}

PolyQ one_minus_q_pow(std::size_t k)
{
	return PolyQ(Rational(1)) - PolyQ::monomial(k, Rational(1));
}

RatFuncQ ratfunc_normalize(const PolyQ &n, const PolyQ &d)
{
	if (d.zero())
		throw std::domain_error("rational function with zero denominator");
	RatFuncQ r;
	if (n.zero())
		return r;
	const PolyQ g = poly_gcd(n, d);
	PolyQ num = n.divmod(g).first;
	PolyQ den = d.divmod(g).first;
	const Rational lead = den.leading();
	r.num_ = num.scaled(Rational(1 / lead));
	r.den_ = den.scaled(Rational(1 / lead));
	return r;
}

RatFuncQ operator+(const RatFuncQ &a, const RatFuncQ &b)
{
	if (a.den_ == b.den_)
		return ratfunc_normalize(a.num_ + b.num_, a.den_);
	return ratfunc_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ &a, const RatFuncQ &b) { return a + (-b); }

RatFuncQ RatFuncQ::operator-() const
{
	RatFuncQ r = *this;
	r.num_ = -r.num_;
	return r;
}

RatFuncQ operator*(const RatFuncQ &a, const RatFuncQ &b)
{
	if (a.zero() || b.zero())
		return {};
	return ratfunc_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncQ operator/(const RatFuncQ &a, const RatFuncQ &b)
{
	if (b.zero())
		throw std::domain_error("rational function division by zero");
	return ratfunc_normalize(a.num_ * b.den_, a.den_ * b.num_);
}

double RatFuncQ::evaluate(double q) const { return num_.evaluate(q) / den_.evaluate(q); }

Rational RatFuncQ::evaluate(const Rational &q) const
{
	const Rational d = den_.evaluate(q);
	if (d == 0)
		throw std::domain_error("rational function pole at q = " + to_string(q));
	return num_.evaluate(q) / d;
}

std::string to_string(const RatFuncQ &r)
{
	if (r.denominator() == PolyQ(Rational(1)))
		return to_string(r.numerator());
	return "(" + to_string(r.numerator()) + ") / (" + to_string(r.denominator()) + ")";
}

RatFuncQ parse_ratfunc(std::string_view text)
{
	int depth = 0;
	for (std::size_t i = 0; i < text.size(); ++i)
	{
		if (text[i] == '(')
			++depth;
		else if (text[i] == ')')
			--depth;
		else if (text[i] == '/' && depth == 0 && i > 0 && text[i - 1] == ' ')
			return ratfunc_normalize(parse_poly(text.substr(0, i)), parse_poly(text.substr(i + 1)));
	}
	return RatFuncQ(parse_poly(text));
}

} // namespace rbx
