#include "rbx/letters.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <stdexcept>

namespace rbx
{

namespace
{

void require_positive(int v, const char *what)
{
	if (v < 1)
		throw std::invalid_argument(std::string(what) + " index must be positive, got " + std::to_string(v));
}

void trim_exponents(std::vector<int> &z)
{
	while (!z.empty() && z.back() == 0)
		z.pop_back();
}

std::mutex exponents_mutex;
std::set<std::vector<int>> &exponents_pool()
{
	static std::set<std::vector<int>> pool;
	return pool;
}

int parse_int(std::string_view s)
{
	if (s.empty())
		throw std::invalid_argument("expected an integer");
	std::size_t i = 0;
	if (s[0] == '-' || s[0] == '+')
		i = 1;
	if (i == s.size())
		throw std::invalid_argument("expected an integer");
	for (std::size_t j = i; j < s.size(); ++j)
		if (!std::isdigit(static_cast<unsigned char>(s[j])))
			throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
	if (s.size() > 9)
		throw std::invalid_argument("integer out of range: '" + std::string(s) + "'");
	return std::stoi(std::string(s));
}

std::string_view strip(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

} // namespace

Exponents::Exponents(const std::vector<int> &z)
{
	if (z.empty())
		return;
	const std::lock_guard lock(exponents_mutex);
	p_ = &*exponents_pool().insert(z).first;
}

std::strong_ordering Exponents::compare(Exponents a, Exponents b)
{
	static const std::vector<int> none;
	const auto &x = a.p_ ? *a.p_ : none;
	const auto &y = b.p_ ? *b.p_ : none;
	return x <=> y;
}

std::string_view system_name(LetterSystem s)
{
	switch (s)
	{
	case LetterSystem::composition:
		return "composition";
	case LetterSystem::q_letter:
		return "q";
	case LetterSystem::word:
		return "word";
	case LetterSystem::polylog:
		return "polylog";
	case LetterSystem::monomial:
		return "monomial";
	}
	return "?";
}

Letter Letter::composition(int s)
{
	require_positive(s, "composition letter");
	return Letter{LetterSystem::composition, false, s, {}};
}

Letter Letter::q_letter(int s)
{
	require_positive(s, "q-letter");
	return Letter{LetterSystem::q_letter, false, s, {}};
}

Letter Letter::polylog(int s, std::vector<int> z)
{
	require_positive(s, "polylog letter");
	trim_exponents(z);
	return Letter{LetterSystem::polylog, false, s, Exponents(z)};
}

Letter Letter::monomial(int i)
{
	require_positive(i, "monomial");
	return Letter{LetterSystem::monomial, false, i, {}};
}

bool has_zero_product(LetterSystem system) { return system == LetterSystem::word; }

LetterComb letter_product(const Letter &x, const Letter &y)
{
	if (x.system != y.system)
		throw std::invalid_argument("letter product across systems " + std::string(system_name(x.system)) + " and " +
		                            std::string(system_name(y.system)));
	const Scalar one(Rational(1));
	if (x.unit)
		return {{y, one}};
	if (y.unit)
		return {{x, one}};

	switch (x.system)
	{
	case LetterSystem::composition:
		return {{Letter::composition(x.index + y.index), one}};
	case LetterSystem::monomial:
		return {{Letter::monomial(x.index + y.index), one}};
	case LetterSystem::q_letter:
	{
		// q_{s+t-1} first keeps the combination in canonical letter order.
		LetterComb out;
		out.emplace_back(Letter::q_letter(x.index + y.index - 1), one_minus_q_pow(1));
		out.emplace_back(Letter::q_letter(x.index + y.index), one);
		return out;
	}
	case LetterSystem::polylog:
	{
		std::vector<int> z(std::max(x.z.size(), y.z.size()), 0);
		for (std::size_t i = 0; i < x.z.size(); ++i)
			z[i] += x.z[i];
		for (std::size_t i = 0; i < y.z.size(); ++i)
			z[i] += y.z[i];
		return {{Letter::polylog(x.index + y.index, std::move(z)), one}};
	}
	case LetterSystem::word:
		return {};
	}
	return {};
}

int filtration_degree(const Letter &x)
{
	if (x.unit)
		return 0;
	if (x.system == LetterSystem::word)
		return x.index == 0 ? 2 : 1;
	return x.index;
}

std::string to_string(const Letter &x)
{
	if (x.unit)
		return "1";
	switch (x.system)
	{
	case LetterSystem::composition:
		return std::to_string(x.index);
	case LetterSystem::q_letter:
		return "q[" + std::to_string(x.index) + "]";
	case LetterSystem::word:
		return x.index == 0 ? "x0" : "x1";
	case LetterSystem::monomial:
		return "a^" + std::to_string(x.index);
	case LetterSystem::polylog:
	{
		std::string out = "(" + std::to_string(x.index) + ";";
		for (std::size_t i = 0; i < x.z.size(); ++i)
			if (x.z[i] != 0)
				out += " z" + std::to_string(i + 1) + "^" + std::to_string(x.z[i]);
		return out + ")";
	}
	}
	return "?";
}

Letter parse_letter(std::string_view text)
{
	const auto s = strip(text);
	if (s.empty())
		throw std::invalid_argument("empty letter");
	if (s == "x0")
		return Letter::x0();
	if (s == "x1")
		return Letter::x1();
	if (s.size() > 3 && s.substr(0, 2) == "q[" && s.back() == ']')
		return Letter::q_letter(parse_int(s.substr(2, s.size() - 3)));
	if (s == "a")
		return Letter::monomial(1);
	if (s.size() > 2 && s.substr(0, 2) == "a^")
		return Letter::monomial(parse_int(s.substr(2)));
	if (s.front() == '(' && s.back() == ')')
	{
		auto body = s.substr(1, s.size() - 2);
		const auto semi = body.find(';');
		const int index = parse_int(strip(body.substr(0, semi)));
		std::vector<int> z;
		if (semi != std::string_view::npos)
		{
			auto rest = body.substr(semi + 1);
			while (!(rest = strip(rest)).empty())
			{
				const auto end = rest.find(' ');
				auto token = rest.substr(0, end);
				rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
				if (token.size() < 2 || token[0] != 'z')
					throw std::invalid_argument("malformed polylog symbol '" + std::string(token) + "'");
				const auto caret = token.find('^');
				const int sym = parse_int(token.substr(1, caret == std::string_view::npos ? token.npos : caret - 1));
				const int exp = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1));
				if (sym < 1 || sym > 64)
					throw std::invalid_argument("polylog symbol index out of range");
				if (z.size() < static_cast<std::size_t>(sym))
					z.resize(static_cast<std::size_t>(sym), 0);
				z[static_cast<std::size_t>(sym - 1)] += exp;
			}
		}
		return Letter::polylog(index, std::move(z));
	}
	return Letter::composition(parse_int(s));
}

} // namespace rbx
