#ifndef RBX_MZV_CALCULUS_HPP
#define RBX_MZV_CALCULUS_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rbx/coefficients.hpp"
#include "rbx/tensor_algebra.hpp"

namespace rbx
{

// Index tuple (s1, ..., sk) of a multiple zeta value. s1 is attached to the
// largest summation index. Ordered by weight, then depth, then parts.
class Composition
{
public:
	Composition() = default;
	explicit Composition(std::vector<int> parts);

	const std::vector<int> &parts() const { return parts_; }
	int weight() const;
	std::size_t depth() const { return parts_.size(); }
	bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }

	std::strong_ordering operator<=>(const Composition &o) const;
	bool operator==(const Composition &o) const = default;

private:
	std::vector<int> parts_;
};

std::string to_string(const Composition &c);
Composition parse_composition(std::string_view text);

// Composition letters (s1, ..., sk) as a tensor word, and back.
Word to_letter_word(const Composition &c);
Composition from_letter_word(const Word &w);

// Finite rational combination of compositions.
using ZetaCombo = std::map<Composition, Rational>;

std::string to_string(const ZetaCombo &z);

// Formal product zeta(c1) ... zeta(cr) as a sorted multiset of factors.
class ZetaMonomial
{
public:
	ZetaMonomial() = default;
	explicit ZetaMonomial(std::vector<Composition> factors);

	const std::vector<Composition> &factors() const { return factors_; }
	int weight() const;
	std::size_t max_depth() const;

	std::strong_ordering operator<=>(const ZetaMonomial &o) const;
	bool operator==(const ZetaMonomial &o) const = default;

	friend ZetaMonomial operator*(const ZetaMonomial &a, const ZetaMonomial &b);

private:
	std::vector<Composition> factors_;
};

std::string to_string(const ZetaMonomial &m);

// Rational polynomial in formal zeta symbols.
class ZetaPolynomial
{
public:
	using Terms = std::map<ZetaMonomial, Rational>;

	ZetaPolynomial() = default;
	ZetaPolynomial(const Rational &c);
	ZetaPolynomial(long c) : ZetaPolynomial(Rational(c)) {}
	static ZetaPolynomial symbol(const Composition &c);
	static ZetaPolynomial from_combo(const ZetaCombo &z);

	void add(const ZetaMonomial &m, const Rational &c);
	const Terms &terms() const { return terms_; }
	bool zero() const { return terms_.empty(); }
	Rational coefficient(const ZetaMonomial &m) const;

	ZetaPolynomial &operator+=(const ZetaPolynomial &o);
	ZetaPolynomial &operator-=(const ZetaPolynomial &o);
	friend ZetaPolynomial operator+(ZetaPolynomial a, const ZetaPolynomial &b) { return a += b; }
	friend ZetaPolynomial operator-(ZetaPolynomial a, const ZetaPolynomial &b) { return a -= b; }
	friend ZetaPolynomial operator*(const ZetaPolynomial &a, const ZetaPolynomial &b);
	friend ZetaPolynomial operator*(const ZetaPolynomial &a, const Rational &r);
	friend bool operator==(const ZetaPolynomial &a, const ZetaPolynomial &b) { return a.terms_ == b.terms_; }

private:
	Terms terms_;
};

inline bool is_zero(const ZetaPolynomial &p) { return p.zero(); }

std::string to_string(const ZetaPolynomial &p);

// Polynomial identity asserted to vanish, with the generator that produced it.
struct Relation
{
	ZetaPolynomial terms;
	std::string source;

	bool trivial() const { return terms.zero(); }
	int weight() const;
	std::size_t max_depth() const;
	bool admissible() const;
};

// Products of compositions as formal MZV combinations.
ZetaCombo stuffle(const Composition &a, const Composition &b);
ZetaCombo shuffle_zeta(const Composition &a, const Composition &b);

// x0^(s-1) x1 per part. Both directions require admissibility.
Word comp_to_word(const Composition &c);
Composition word_to_comp(const Word &w);

Relation double_shuffle_relation(const Composition &a, const Composition &b);
Relation hoffman_partition_relation(const std::vector<int> &s);
Relation spitzer_zeta_relation(int k, int order);

struct CongruenceRelation
{
	Relation relation; // zeta(s)^p minus its stuffle expansion
	ZetaCombo expansion;
	Composition target; // (p s1, ..., p sn)
	int modulus = 0;
	bool holds = false;
};

CongruenceRelation congruence_zeta_relation(const Composition &s, int p);

bool is_prime(long n);

} // namespace rbx

#endif
