#include "rbx/mzv_calculus.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "rbx/set_partition.hpp"
#include "rbx/trunc_series.hpp"

namespace rbx
{

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
	if (parts_.empty())
		throw std::invalid_argument("composition must have at least one part");
	for (int s : parts_)
		if (s < 1)
			throw std::invalid_argument("composition parts must be positive");
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::strong_ordering Composition::operator<=>(const Composition &o) const
{
	if (auto c = weight() <=> o.weight(); c != 0)
		return c;
	if (auto c = depth() <=> o.depth(); c != 0)
		return c;
	return parts_ <=> o.parts_;
}

std::string to_string(const Composition &c)
{
	std::string out;
	for (std::size_t i = 0; i < c.parts().size(); ++i)
		out += (i ? "," : "") + std::to_string(c.parts()[i]);
	return out;
}

Composition parse_composition(std::string_view text)
{
	std::vector<int> parts;
	std::size_t start = 0;
	for (std::size_t i = 0; i <= text.size(); ++i)
	{
		if (i < text.size() && text[i] != ',')
			continue;
		auto tok = text.substr(start, i - start);
		while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
			tok.remove_prefix(1);
		while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
			tok.remove_suffix(1);
		if (tok.empty() || tok.size() > 6 ||
		    !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
			throw std::invalid_argument("malformed composition '" + std::string(text) + "'");
		parts.push_back(std::stoi(std::string(tok)));
		start = i + 1;
	}
	return Composition(std::move(parts));
}

Word to_letter_word(const Composition &c)
{
	Word w;
	for (int s : c.parts())
		w.push_back(Letter::composition(s));
	return w;
}

Composition from_letter_word(const Word &w)
{
	std::vector<int> parts;
	for (const auto &l : w)
	{
		if (l.system != LetterSystem::composition || l.unit)
			throw std::invalid_argument("word is not over composition letters");
		parts.push_back(l.index);
	}
	return Composition(std::move(parts));
}

std::string to_string(const ZetaCombo &z)
{
	ZetaPolynomial p;
	for (const auto &[c, r] : z)
		p.add(ZetaMonomial({c}), r);
	return to_string(p);
}

ZetaMonomial::ZetaMonomial(std::vector<Composition> factors) : factors_(std::move(factors))
{
	std::sort(factors_.begin(), factors_.end());
}

int ZetaMonomial::weight() const
{
	int w = 0;
	for (const auto &c : factors_)
		w += c.weight();
	return w;
}

std::size_t ZetaMonomial::max_depth() const
{
	std::size_t d = 0;
	for (const auto &c : factors_)
		d = std::max(d, c.depth());
	return d;
}

std::strong_ordering ZetaMonomial::operator<=>(const ZetaMonomial &o) const
{
	if (auto c = weight() <=> o.weight(); c != 0)
		return c;
	if (auto c = factors_.size() <=> o.factors_.size(); c != 0)
		return c;
	return factors_ <=> o.factors_;
}

ZetaMonomial operator*(const ZetaMonomial &a, const ZetaMonomial &b)
{
	std::vector<Composition> f = a.factors_;
	f.insert(f.end(), b.factors_.begin(), b.factors_.end());
	return ZetaMonomial(std::move(f));
}

std::string to_string(const ZetaMonomial &m)
{
	if (m.factors().empty())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < m.factors().size(); ++i)
		out += (i ? "*" : "") + std::string("zeta(") + to_string(m.factors()[i]) + ")";
	return out;
}

ZetaPolynomial::ZetaPolynomial(const Rational &c) { add(ZetaMonomial(), c); }

ZetaPolynomial ZetaPolynomial::symbol(const Composition &c)
{
	ZetaPolynomial p;
	p.add(ZetaMonomial({c}), Rational(1));
	return p;
}

ZetaPolynomial ZetaPolynomial::from_combo(const ZetaCombo &z)
{
	ZetaPolynomial p;
	for (const auto &[c, r] : z)
		p.add(ZetaMonomial({c}), r);
	return p;
}

void ZetaPolynomial::add(const ZetaMonomial &m, const Rational &c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Rational ZetaPolynomial::coefficient(const ZetaMonomial &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Rational(0) : it->second;
}

ZetaPolynomial &ZetaPolynomial::operator+=(const ZetaPolynomial &o)
{
	for (const auto &[m, c] : o.terms_)
		add(m, c);
	return *this;
}

ZetaPolynomial &ZetaPolynomial::operator-=(const ZetaPolynomial &o)
{
	for (const auto &[m, c] : o.terms_)
		add(m, Rational(-c));
	return *this;
}

ZetaPolynomial operator*(const ZetaPolynomial &a, const ZetaPolynomial &b)
{
	ZetaPolynomial out;
	for (const auto &[ma, ca] : a.terms_)
		for (const auto &[mb, cb] : b.terms_)
			out.add(ma * mb, Rational(ca * cb));
	return out;
}

ZetaPolynomial operator*(const ZetaPolynomial &a, const Rational &r)
{
	ZetaPolynomial out;
	for (const auto &[m, c] : a.terms_)
		out.add(m, Rational(c * r));
	return out;
}

std::string to_string(const ZetaPolynomial &p)
{
	if (p.zero())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[m, c] : p.terms())
	{
		const bool negative = sgn(c) < 0;
		const Rational mag = abs(c);
		std::string term;
		if (m.factors().empty())
			term = to_string(mag);
		else
			term = (mag == 1 ? "" : to_string(mag) + "*") + to_string(m);
		if (first)
			out = (negative ? "-" : "") + term;
		else
			out += (negative ? " - " : " + ") + term;
		first = false;
	}
	return out;
}

int Relation::weight() const
{
	int w = 0;
	for (const auto &[m, c] : terms.terms())
		w = std::max(w, m.weight());
	return w;
}

std::size_t Relation::max_depth() const
{
	std::size_t d = 0;
	for (const auto &[m, c] : terms.terms())
		d = std::max(d, m.max_depth());
	return d;
}

bool Relation::admissible() const
{
	for (const auto &[m, c] : terms.terms())
		for (const auto &f : m.factors())
			if (!f.admissible())
				return false;
	return true;
}

namespace
{

ZetaCombo decode_letters(const LinComb &lc)
{
	ZetaCombo out;
	for (const auto &[w, c] : lc.terms())
	{
		if (!c.is_constant())
			throw std::logic_error("non-rational coefficient in composition product");
		out[from_letter_word(w)] += c.coefficient(0);
	}
	return out;
}

void require_admissible(const Composition &c, const char *what)
{
	if (!c.admissible())
		throw std::domain_error(std::string(what) + ": composition (" + to_string(c) + ") is not admissible");
}

ZetaPolynomial depth_one(int s) { return ZetaPolynomial::symbol(Composition({s})); }

// Scale so that the greatest monomial has coefficient 1.
void normalize(ZetaPolynomial &p)
{
	if (p.zero())
		return;
	const Rational lead = p.terms().rbegin()->second;
	p = p * Rational(1 / lead);
}

} // namespace

ZetaCombo stuffle(const Composition &a, const Composition &b)
{
	return decode_letters(mixable_shuffle(to_letter_word(a), to_letter_word(b), Scalar(Rational(1))));
}

Word comp_to_word(const Composition &c)
{
	require_admissible(c, "comp_to_word");
	Word w;
	for (int s : c.parts())
	{
		for (int i = 1; i < s; ++i)
			w.push_back(Letter::x0());
		w.push_back(Letter::x1());
	}
	return w;
}

Composition word_to_comp(const Word &w)
{
	if (w.empty() || w.front() != Letter::x0() || w.back() != Letter::x1())
		throw std::domain_error("word_to_comp: word must start with x0 and end with x1");
	std::vector<int> parts;
	int run = 0;
	for (const auto &l : w)
	{
		if (l.system != LetterSystem::word || l.unit)
			throw std::invalid_argument("word_to_comp: not a word over x0, x1");
		++run;
		if (l.index == 1)
		{
			parts.push_back(run);
			run = 0;
		}
	}
	return Composition(std::move(parts));
}

ZetaCombo shuffle_zeta(const Composition &a, const Composition &b)
{
	const LinComb prod = mixable_shuffle(comp_to_word(a), comp_to_word(b), Scalar());
	ZetaCombo out;
	for (const auto &[w, c] : prod.terms())
		out[word_to_comp(w)] += c.coefficient(0);
	return out;
}

Relation double_shuffle_relation(const Composition &a, const Composition &b)
{
	require_admissible(a, "double_shuffle_relation");
	require_admissible(b, "double_shuffle_relation");
	Relation r;
	r.terms = ZetaPolynomial::from_combo(stuffle(a, b)) - ZetaPolynomial::from_combo(shuffle_zeta(a, b));
	normalize(r.terms);
	r.source = "double_shuffle(" + to_string(a) + "|" + to_string(b) + ")";
	return r;
}

Relation hoffman_partition_relation(const std::vector<int> &s)
{
	const int n = static_cast<int>(s.size());
	if (n < 2 || n > 5)
		throw std::invalid_argument("hoffman_partition_relation: need 2 <= n <= 5 parts");
	for (int v : s)
		if (v < 2)
			throw std::domain_error("hoffman_partition_relation: every part must be >= 2");

	Relation r;
	std::vector<int> perm(static_cast<std::size_t>(n));
	std::iota(perm.begin(), perm.end(), 0);
	do
	{
		std::vector<int> parts;
		for (int i : perm)
			parts.push_back(s[static_cast<std::size_t>(i)]);
		r.terms += ZetaPolynomial::symbol(Composition(std::move(parts)));
	} while (std::next_permutation(perm.begin(), perm.end()));

	for (const auto &part : set_partitions(n))
	{
		ZetaPolynomial term(Rational((n - static_cast<int>(part.blocks.size())) % 2 == 0 ? 1 : -1));
		for (const auto &block : part.blocks)
		{
			int sum = 0;
			for (int j : block)
				sum += s[static_cast<std::size_t>(j - 1)];
			Integer fact = 1;
			for (std::size_t k = 2; k < block.size(); ++k)
				fact *= static_cast<unsigned long>(k);
			term = term * depth_one(sum) * Rational(fact);
		}
		r.terms -= term;
	}

	std::string params;
	for (std::size_t i = 0; i < s.size(); ++i)
		params += (i ? "," : "") + std::to_string(s[i]);
	r.source = "hoffman(" + params + ")";
	return r;
}

Relation spitzer_zeta_relation(int k, int order)
{
	if (k < 2)
		throw std::domain_error("spitzer_zeta_relation: k must be >= 2");
	if (order < 1 || order > 6)
		throw std::invalid_argument("spitzer_zeta_relation: order must be in [1, 6]");

	const auto n = static_cast<std::size_t>(order);
	TruncSeries<ZetaPolynomial> log_side(n, ZetaPolynomial());
	for (int j = 1; j <= order; ++j)
		log_side[static_cast<std::size_t>(j)] = depth_one(j * k) * make_rational(j % 2 == 1 ? 1 : -1, j);
	const auto exp_side = series_exp(log_side);

	Relation r;
	r.terms = ZetaPolynomial::symbol(Composition(std::vector<int>(n, k))) - exp_side[n];
	r.source = "spitzer(" + std::to_string(k) + "|" + std::to_string(order) + ")";
	return r;
}

bool is_prime(long n)
{
	if (n < 2)
		return false;
	for (long d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

CongruenceRelation congruence_zeta_relation(const Composition &s, int p)
{
	require_admissible(s, "congruence_zeta_relation");
	if (!is_prime(p) || p > 7)
		throw std::invalid_argument("congruence_zeta_relation: p must be a prime <= 7");

	const Word w = to_letter_word(s);
	LinComb power(w);
	for (int i = 1; i < p; ++i)
		power = mixable_shuffle(power, LinComb(w), Scalar(Rational(1)));

	CongruenceRelation out;
	out.expansion = decode_letters(power);
	std::vector<int> target;
	for (int v : s.parts())
		target.push_back(p * v);
	out.target = Composition(std::move(target));
	out.modulus = p;

	out.holds = true;
	for (const auto &[c, coef] : out.expansion)
	{
		if (coef.get_den() != 1)
		{
			out.holds = false;
			continue;
		}
		Integer rem = coef.get_num() % p;
		if (rem < 0)
			rem += p;
		if (rem != (c == out.target ? 1 : 0))
			out.holds = false;
	}
	if (out.expansion.find(out.target) == out.expansion.end())
		out.holds = false;

	ZetaPolynomial power_symbol(1);
	for (int i = 0; i < p; ++i)
		power_symbol = power_symbol * ZetaPolynomial::symbol(s);
	out.relation.terms = power_symbol - ZetaPolynomial::from_combo(out.expansion);
	out.relation.source = "congruence(" + to_string(s) + "|" + std::to_string(p) + ")";
	return out;
}

} // namespace rbx
