#ifndef RBX_LETTERS_HPP
#define RBX_LETTERS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbx/coefficients.hpp"

namespace rbx
{

// Coefficient ring of all tensor-level work. Rationals embed as constants;
// the q-letters and the weight 1-q need the polynomial part.
using Scalar = PolyQ;

enum class LetterSystem : std::uint8_t
{
	composition, // f_s = 1/x^s, product f_s f_t = f_{s+t}
	q_letter,    // q_s with q_s q_t = q_{s+t} + (1-q) q_{s+t-1}
	word,        // x0 ~ dt/t, x1 ~ dt/(1-t); zero product
	polylog,     // z^y / x^s with formal z
	monomial,    // a^i in Q[a]
};

std::string_view system_name(LetterSystem s);

// Polylog exponent vector, interned: equal vectors share one stored copy, so
// copies are a pointer and equality is pointer equality. Empty means no z.
class Exponents
{
public:
	Exponents() = default;
	explicit Exponents(const std::vector<int> &z);

	bool empty() const { return p_ == nullptr; }
	std::size_t size() const { return p_ ? p_->size() : 0; }
	int operator[](std::size_t i) const { return (*p_)[i]; }

	friend bool operator==(Exponents a, Exponents b) { return a.p_ == b.p_; }
	friend std::strong_ordering operator<=>(Exponents a, Exponents b)
	{
		return a.p_ == b.p_ ? std::strong_ordering::equal : compare(a, b);
	}

private:
	static std::strong_ordering compare(Exponents a, Exponents b);
	const std::vector<int> *p_ = nullptr;
};

// A letter of one of the concrete systems, or the unit of its unitarization.
//
// index is s for composition, q and polylog letters, i for monomials and
// 0/1 for x0/x1. z holds polylog exponents over the formal symbols z1, z2, ...
// with no trailing zeros.
struct Letter
{
	LetterSystem system = LetterSystem::composition;
	bool unit = false;
	int index = 0;
	Exponents z;

	auto operator<=>(const Letter &) const = default;
	bool operator==(const Letter &) const = default;

	static Letter make_unit(LetterSystem system) { return Letter{system, true, 0, {}}; }
	static Letter composition(int s);
	static Letter q_letter(int s);
	static Letter x0() { return Letter{LetterSystem::word, false, 0, {}}; }
	static Letter x1() { return Letter{LetterSystem::word, false, 1, {}}; }
	static Letter polylog(int s, std::vector<int> z);
	static Letter monomial(int i);
};

using LetterComb = std::vector<std::pair<Letter, Scalar>>;

bool has_zero_product(LetterSystem system);

// Product in the letter algebra, as a ring-weighted combination of letters.
// The zero-product system returns an empty combination.
LetterComb letter_product(const Letter &x, const Letter &y);

int filtration_degree(const Letter &x);

std::string to_string(const Letter &x);
// Parses the text forms "3", "q[3]", "x0", "(2; z1^1 z2^2)", "a^3" (or "a").
Letter parse_letter(std::string_view text);

} // namespace rbx

#endif
