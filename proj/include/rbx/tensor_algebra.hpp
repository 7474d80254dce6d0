#ifndef RBX_TENSOR_ALGEBRA_HPP
#define RBX_TENSOR_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbx/letters.hpp"

namespace rbx
{

// a1 (x) ... (x) an. Inside a LinComb the empty word stands for the scalar 1.
using Word = std::vector<Letter>;

std::string to_string(const Word &w, bool ascii = false);
// Comma separated letters, e.g. "2,1" or "q[2],q[3]".
Word parse_word(std::string_view text);

// Finite formal sum of words with Scalar coefficients, collected in
// lexicographic word order with no stored zeros.
class LinComb
{
public:
	using Terms = std::map<Word, Scalar>;

	LinComb() = default;
	explicit LinComb(const Word &w, const Scalar &c = Scalar(Rational(1))) { add(w, c); }
	explicit LinComb(Terms terms);

	void add(const Word &w, const Scalar &c);
	void add(Word &&w, const Scalar &c);

	const Terms &terms() const { return terms_; }
	bool zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	Scalar coefficient(const Word &w) const;

	LinComb &operator+=(const LinComb &o);
	LinComb &operator-=(const LinComb &o);
	LinComb scaled(const Scalar &c) const;
	friend LinComb operator+(LinComb a, const LinComb &b) { return a += b; }
	friend LinComb operator-(LinComb a, const LinComb &b) { return a -= b; }
	friend bool operator==(const LinComb &a, const LinComb &b) { return a.terms_ == b.terms_; }

	// Letter system shared by all letters, if any letter is present.
	std::optional<LetterSystem> system() const;

private:
	Terms terms_;
};

std::string to_string(const LinComb &c, bool ascii = false);

// Weight-lambda mixable shuffle via the four-case recursion on first letters.
// Throws std::invalid_argument on empty words, mixed letter systems, or a
// nonzero weight over the zero-product system.
LinComb mixable_shuffle(const Word &a, const Word &b, const Scalar &lambda);

// Same product, enumerating every mixable shuffle directly: each output
// position carries a letter of a, a letter of b, or a merged pair.
LinComb mixable_shuffle_direct(const Word &a, const Word &b, const Scalar &lambda);

// Hoffman's quasi-shuffle with bracket = letter product. Empty words are the
// unit. Extended bilinearly by the LinComb overload.
LinComb quasi_shuffle(const Word &a, const Word &b);
LinComb quasi_shuffle(const LinComb &a, const LinComb &b);

// Bilinear extension of mixable_shuffle; the empty word acts as the unit.
LinComb mixable_shuffle(const LinComb &a, const LinComb &b, const Scalar &lambda);

// Element of Sha(A) = A (x) (k + Sha+(A)). Every stored word is nonempty: the
// first letter is the head a0 (possibly the unit letter), the rest the tail.
class ShaElement
{
public:
	ShaElement() = default;
	explicit ShaElement(LinComb terms);

	// j(a) = a (x) 1
	static ShaElement embed(const Letter &a);
	// c * (1 (x) 1)
	static ShaElement scalar(LetterSystem system, const Scalar &c);
	static ShaElement unit(LetterSystem system) { return scalar(system, Scalar(Rational(1))); }
	// The pure tensor w[0] (x) w[1] (x) ... with w[0] as head.
	static ShaElement pure_tensor(const Word &w);

	const LinComb &terms() const { return terms_; }
	bool zero() const { return terms_.zero(); }

	ShaElement &operator+=(const ShaElement &o);
	ShaElement &operator-=(const ShaElement &o);
	friend ShaElement operator+(ShaElement a, const ShaElement &b) { return a += b; }
	friend ShaElement operator-(ShaElement a, const ShaElement &b) { return a -= b; }
	friend ShaElement operator*(const ShaElement &a, const Rational &r);
	friend bool operator==(const ShaElement &a, const ShaElement &b) { return a.terms_ == b.terms_; }

private:
	LinComb terms_;
};

inline bool is_zero(const ShaElement &x) { return x.zero(); }

std::string to_string(const ShaElement &x, bool ascii = false);

ShaElement sha_product(const ShaElement &x, const ShaElement &y, const Scalar &lambda);

// P(a0 (x) u) = 1 (x) a0 (x) u
ShaElement rb_operator(const ShaElement &x);

// u * v = u P(v) + P(u) v + lambda u v, so that P(u) P(v) = P(u * v).
ShaElement star_product(const ShaElement &u, const ShaElement &v, const Scalar &lambda);

} // namespace rbx

#endif
