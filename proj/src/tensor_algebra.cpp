#include "rbx/tensor_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <type_traits>
#include <utility>

namespace rbx
{

namespace
{

const Scalar &one()
{
	static const Scalar value(Rational(1));
	return value;
}

LetterSystem common_system(const Word &a, const Word &b)
{
	if (a.empty() || b.empty())
		throw std::invalid_argument("tensor words must be nonempty");
	const LetterSystem sys = a.front().system;
	for (const auto *w : {&a, &b})
		for (const auto &l : *w)
			if (l.system != sys)
				throw std::invalid_argument("tensor words mix letter systems");
	return sys;
}

void check_weight(LetterSystem sys, const Scalar &lambda)
{
	if (has_zero_product(sys) && !lambda.zero())
		throw std::invalid_argument("nonzero weight over a zero-product letter system");
}

Word suffix(const Word &w, std::size_t from) { return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.end()); }

Word prepend(const Letter &l, const Word &w)
{
	Word out;
	out.reserve(w.size() + 1);
	out.push_back(l);
	out.insert(out.end(), w.begin(), w.end());
	return out;
}

// sum over (l, c) in letters, (w, d) in rest of  factor * c * d * (l w)
void add_prepended(LinComb &out, const LetterComb &letters, const LinComb &rest, const Scalar &factor)
{
	for (const auto &[l, c] : letters)
	{
		const Scalar lc = factor * c;
		for (const auto &[w, d] : rest.terms())
			out.add(prepend(l, w), lc * d);
	}
}

void add_prepended(LinComb &out, const Letter &l, const LinComb &rest)
{
	for (const auto &[w, d] : rest.terms())
		out.add(prepend(l, w), d);
}

// Letters of a, b and of the products a[i]b[j], replaced by their rank in the
// sorted alphabet. A word of ranks packs into a key as rank + 1 per field of
// `bits` bits, left aligned, so keys compare like the words. Coefficients are
// indices into pool, pool[0] being one.
struct Ranked
{
	std::vector<Letter> alphabet;
	std::vector<std::uint32_t> ra, rb;
	// merged letters of (i, j) are merged[start[i * n + j] .. start[i * n + j + 1])
	std::vector<std::pair<std::uint32_t, std::size_t>> merged;
	std::vector<std::size_t> start{0};
	std::vector<Scalar> pool{one()};
	int bits = 1;
	bool packed = false;

	Ranked(const Word &a, const Word &b, const Scalar &lambda)
	{
		thread_local std::map<std::pair<Letter, Letter>, LetterComb> cache;
		if (cache.size() > 4096)
			cache.clear();
		const bool merge = !lambda.zero();
		std::vector<const LetterComb *> products;
		alphabet.assign(a.begin(), a.end());
		alphabet.insert(alphabet.end(), b.begin(), b.end());
		if (merge)
			for (const auto &x : a)
				for (const auto &y : b)
				{
					auto it = cache.find({x, y});
					if (it == cache.end())
						it = cache.emplace(std::pair{x, y}, letter_product(x, y)).first;
					products.push_back(&it->second);
					for (const auto &[l, c] : it->second)
						alphabet.push_back(l);
				}
		std::sort(alphabet.begin(), alphabet.end());
		alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
		for (const auto &x : a)
			ra.push_back(rank(x));
		for (const auto &y : b)
			rb.push_back(rank(y));

		const bool unit_weight = lambda == one();
		for (const auto *prod : products)
		{
			for (const auto &[l, c] : *prod)
			{
				std::size_t idx = 0;
				if (!(unit_weight && c == one()))
				{
					Scalar f = lambda * c;
					if (f.zero())
						continue;
					if (f != one())
					{
						pool.push_back(std::move(f));
						idx = pool.size() - 1;
					}
				}
				merged.emplace_back(rank(l), idx);
			}
			start.push_back(merged.size());
		}
		bits = std::bit_width(alphabet.size());
		packed = static_cast<std::size_t>(bits) * (a.size() + b.size()) <= 64;
	}

	std::uint32_t rank(const Letter &l) const
	{
		return static_cast<std::uint32_t>(std::lower_bound(alphabet.begin(), alphabet.end(), l) - alphabet.begin());
	}

	std::uint64_t field(std::uint32_t r, std::size_t pos) const
	{
		return std::uint64_t{r + 1} << (64 - bits * static_cast<int>(pos + 1));
	}

	Word decode(std::uint64_t key) const
	{
		Word w;
		if (key == 0)
			return w;
		const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
		w.reserve(static_cast<std::size_t>((63 - std::countr_zero(key)) / bits + 1));
		for (int shift = 64 - bits; shift >= 0; shift -= bits)
		{
			const std::uint64_t r = (key >> shift) & mask;
			if (r == 0)
				break;
			w.push_back(alphabet[r - 1]);
		}
		return w;
	}

	// index of pool[x] * pool[y]
	std::size_t times(std::size_t x, std::size_t y)
	{
		if (x == 0 || y == 0)
			return x + y;
		Scalar prod = pool[x] * pool[y];
		pool.push_back(std::move(prod));
		return pool.size() - 1;
	}
};

// A term of a product under construction: packed word and coefficient, or,
// for unpacked words, rows[row .. row + len).
struct Leaf
{
	std::uint64_t key;
	std::size_t coef;
	std::size_t row;
	std::size_t len;
};

// Sums leaves with equal words into a LinComb.
LinComb collect(const Ranked &rk, std::vector<Leaf> &leaves, const std::vector<std::uint32_t> &rows)
{
	auto row = [&](const Leaf &x) { return std::span<const std::uint32_t>(rows.data() + x.row, x.len); };
	if (rk.packed)
		std::sort(leaves.begin(), leaves.end(), [](const Leaf &x, const Leaf &y) { return x.key < y.key; });
	else
		std::sort(leaves.begin(), leaves.end(), [&](const Leaf &x, const Leaf &y) {
			const auto rx = row(x);
			const auto ry = row(y);
			return std::lexicographical_compare(rx.begin(), rx.end(), ry.begin(), ry.end());
		});
	auto same = [&](const Leaf &x, const Leaf &y) {
		return rk.packed ? x.key == y.key : std::ranges::equal(row(x), row(y));
	};
	auto word = [&](const Leaf &x) {
		if (rk.packed)
			return rk.decode(x.key);
		Word w;
		w.reserve(x.len);
		for (const auto r : row(x))
			w.push_back(rk.alphabet[r]);
		return w;
	};

	LinComb::Terms terms;
	for (std::size_t k = 0; k < leaves.size();)
	{
		std::size_t e = k;
		long units = 0;
		bool weighted = false;
		for (; e < leaves.size() && same(leaves[e], leaves[k]); ++e)
		{
			units += leaves[e].coef == 0;
			weighted |= leaves[e].coef != 0;
		}
		if (!weighted)
		{
			terms.emplace_hint(terms.end(), std::piecewise_construct, std::forward_as_tuple(word(leaves[k])),
			                   std::forward_as_tuple(std::in_place, units));
			k = e;
			continue;
		}
		Scalar c(std::in_place, units);
		for (std::size_t t = k; t < e; ++t)
			if (leaves[t].coef != 0)
				c += rk.pool[leaves[t].coef];
		if (!c.zero())
			terms.emplace_hint(terms.end(), word(leaves[k]), std::move(c));
		k = e;
	}
	return LinComb(std::move(terms));
}

// Depth-first walk of the four-case recursion on first letters: at (i, j)
// the output goes on with a[i], with b[j], or with a letter of a[i]b[j]
// weighted by lambda. Once either word is used up the rest of the other
// follows.
LinComb mixable_walk(const Word &a, const Word &b, const Scalar &lambda)
{
	const std::size_t m = a.size();
	const std::size_t n = b.size();
	Ranked rk(a, b, lambda);
	thread_local std::vector<std::uint32_t> prefix;
	thread_local std::vector<std::uint32_t> rows;
	thread_local std::vector<Leaf> leaves;
	prefix.clear();
	rows.clear();
	leaves.clear();

	auto walk = [&](auto &&self, std::size_t i, std::size_t j, std::size_t coef, std::uint64_t key,
	                std::size_t depth) -> void {
		if (i == m || j == n)
		{
			if (rk.packed)
			{
				for (std::size_t t = i; t < m; ++t)
					key |= rk.field(rk.ra[t], depth++);
				for (std::size_t t = j; t < n; ++t)
					key |= rk.field(rk.rb[t], depth++);
				leaves.push_back({key, coef, 0, 0});
				return;
			}
			const std::size_t row = rows.size();
			rows.insert(rows.end(), prefix.begin(), prefix.end());
			rows.insert(rows.end(), rk.ra.begin() + static_cast<std::ptrdiff_t>(i), rk.ra.end());
			rows.insert(rows.end(), rk.rb.begin() + static_cast<std::ptrdiff_t>(j), rk.rb.end());
			leaves.push_back({0, coef, row, rows.size() - row});
			return;
		}
		auto step = [&](std::uint32_t r, std::size_t ni, std::size_t nj, std::size_t c) {
			if (rk.packed)
				self(self, ni, nj, c, key | rk.field(r, depth), depth + 1);
			else
			{
				prefix.push_back(r);
				self(self, ni, nj, c, 0, depth + 1);
				prefix.pop_back();
			}
		};
		step(rk.ra[i], i + 1, j, coef);
		step(rk.rb[j], i, j + 1, coef);
		if (rk.merged.empty())
			return;
		for (std::size_t k = rk.start[i * n + j]; k < rk.start[i * n + j + 1]; ++k)
		{
			const auto [l, f] = rk.merged[k];
			step(l, i + 1, j + 1, rk.times(coef, f));
		}
	};
	walk(walk, 0, 0, 0, 0, 0);
	return collect(rk, leaves, rows);
}

// Coefficients as machine integers, valid while every weighted letter product
// has integer coefficients and nothing overflows.
struct IntCoefs
{
	using Coef = long;
	std::vector<long> factor;
	bool overflow = false;

	static std::optional<IntCoefs> make(const Ranked &rk)
	{
		IntCoefs ops;
		for (const auto &p : rk.pool)
		{
			if (!p.is_constant())
				return std::nullopt;
			const Rational c = p.coefficient(0);
			if (c.get_den() != 1 || !c.get_num().fits_slong_p())
				return std::nullopt;
			ops.factor.push_back(c.get_num().get_si());
		}
		return ops;
	}

	static Coef unit() { return 1; }
	Coef scale(Coef x, std::size_t f)
	{
		Coef r;
		overflow |= __builtin_mul_overflow(x, factor[f], &r);
		return r;
	}
	Coef add(Coef x, Coef y)
	{
		Coef r;
		overflow |= __builtin_add_overflow(x, y, &r);
		return r;
	}
	static bool zero(Coef x) { return x == 0; }
	bool failed() const { return overflow; }
	void emplace(LinComb::Terms &terms, Word &&w, Coef x) const
	{
		terms.emplace_hint(terms.end(), std::piecewise_construct, std::forward_as_tuple(std::move(w)),
		                   std::forward_as_tuple(std::in_place, x));
	}
};

// Coefficients as indices into the pool.
struct PoolCoefs
{
	using Coef = std::size_t;
	Ranked &rk;

	static Coef unit() { return 0; }
	Coef scale(Coef x, std::size_t f) { return rk.times(x, f); }
	Coef add(Coef x, Coef y)
	{
		Scalar sum = rk.pool[x] + rk.pool[y];
		rk.pool.push_back(std::move(sum));
		return rk.pool.size() - 1;
	}
	bool zero(Coef x) const { return rk.pool[x].zero(); }
	static bool failed() { return false; }
	void emplace(LinComb::Terms &terms, Word &&w, Coef x) const { terms.emplace_hint(terms.end(), std::move(w), rk.pool[x]); }
};

// Products of suffix pairs kept sorted by packed word, equal words collected.
// A table is built from pieces "letter r, times factor f, prepended to table
// t"; prepending keeps the order of t, so only pieces sharing a first letter
// have to be merged.
template <class Ops>
class SuffixTables
{
public:
	using Coef = typename Ops::Coef;
	struct Term
	{
		std::uint64_t key;
		Coef coef;
	};
	struct Piece
	{
		std::uint32_t rank;
		std::size_t factor;
		std::size_t table;
	};

	SuffixTables(const Ranked &rk, Ops &ops) : rk_(rk), ops_(ops)
	{
		terms_.clear();
		first_.clear();
		size_.clear();
	}

	std::size_t word(std::uint64_t key)
	{
		first_.push_back(terms_.size());
		size_.push_back(1);
		terms_.push_back({key, Ops::unit()});
		return first_.size() - 1;
	}

	std::size_t build(std::vector<Piece> &pieces)
	{
		std::sort(pieces.begin(), pieces.end(), [](const Piece &x, const Piece &y) { return x.rank < y.rank; });
		std::size_t bound = 0;
		for (const auto &p : pieces)
			bound += size_[p.table];
		if (terms_.capacity() < terms_.size() + bound)
			terms_.reserve(std::max(terms_.size() + bound, 2 * terms_.capacity()));
		const std::size_t start = terms_.size();
		for (std::size_t k = 0; k < pieces.size();)
		{
			std::size_t e = k + 1;
			while (e < pieces.size() && pieces[e].rank == pieces[k].rank)
				++e;
			if (e == k + 1)
				append(pieces[k]);
			else
				merge(pieces.begin() + static_cast<std::ptrdiff_t>(k), pieces.begin() + static_cast<std::ptrdiff_t>(e));
			k = e;
		}
		first_.push_back(start);
		size_.push_back(terms_.size() - start);
		return first_.size() - 1;
	}

	LinComb result(std::size_t table) const
	{
		LinComb::Terms out;
		for (std::size_t t = first_[table]; t < first_[table] + size_[table]; ++t)
			ops_.emplace(out, rk_.decode(terms_[t].key), terms_[t].coef);
		return LinComb(std::move(out));
	}

private:
	std::uint64_t prefixed(std::uint32_t r, std::uint64_t key) const { return rk_.field(r, 0) | (key >> rk_.bits); }

	void append(const Piece &p)
	{
		auto &terms = terms_;
		const std::size_t from = first_[p.table];
		const std::size_t n = size_[p.table];
		const std::uint64_t head = rk_.field(p.rank, 0);
		const int bits = rk_.bits;
		for (std::size_t t = from; t < from + n; ++t)
			terms.push_back({head | (terms[t].key >> bits), ops_.scale(terms[t].coef, p.factor)});
	}

	// Pieces with one first letter: merge their tables pairwise in scratch.
	template <class It>
	void merge(It from, It to)
	{
		thread_local std::vector<Term> acc, next;
		auto &tables = terms_;
		acc.clear();
		for (; from != to; ++from)
		{
			const Term *src = tables.data() + first_[from->table];
			const std::size_t n = size_[from->table];
			next.clear();
			std::size_t i = 0, j = 0;
			while (i < acc.size() || j < n)
			{
				if (j == n || (i < acc.size() && acc[i].key < src[j].key))
					next.push_back(acc[i++]);
				else
				{
					Term x{src[j].key, ops_.scale(src[j].coef, from->factor)};
					++j;
					if (i < acc.size() && acc[i].key == x.key)
					{
						x.coef = ops_.add(acc[i++].coef, x.coef);
						if (ops_.zero(x.coef))
							continue;
					}
					next.push_back(x);
				}
			}
			std::swap(acc, next);
		}
		const std::uint32_t r = (to - 1)->rank;
		for (const auto &x : acc)
			tables.push_back({prefixed(r, x.key), x.coef});
	}

	const Ranked &rk_;
	Ops &ops_;
	static thread_local std::vector<Term> terms_;
	static thread_local std::vector<std::size_t> first_, size_;
};

template <class Ops>
thread_local std::vector<typename SuffixTables<Ops>::Term> SuffixTables<Ops>::terms_;
template <class Ops>
thread_local std::vector<std::size_t> SuffixTables<Ops>::first_;
template <class Ops>
thread_local std::vector<std::size_t> SuffixTables<Ops>::size_;

// Runs build(tables, ops) with integer coefficients when possible, otherwise
// with pool coefficients.
template <class Build>
LinComb with_tables(Ranked &rk, Build build)
{
	if (auto ints = IntCoefs::make(rk))
	{
		SuffixTables<IntCoefs> tables(rk, *ints);
		const std::size_t top = build(tables);
		if (!ints->failed())
			return tables.result(top);
	}
	PoolCoefs pool{rk};
	SuffixTables<PoolCoefs> tables(rk, pool);
	return tables.result(build(tables));
}

std::uint64_t suffix_key(const Ranked &rk, const std::vector<std::uint32_t> &ranks, std::size_t from)
{
	std::uint64_t key = 0;
	for (std::size_t t = from; t < ranks.size(); ++t)
		key |= rk.field(ranks[t], t - from);
	return key;
}

// Four-case recursion on packed words. T(i, j) = a[i..] <> b[j..]:
//   a[i] (a[i+1..] <> b[j..]) + b[j] (a[i..] <> b[j+1..]) + lambda [a[i] b[j]] (a[i+1..] <> b[j+1..])
// where a suffix product with one side used up is the other word itself.
std::optional<LinComb> mixable_packed(const Word &a, const Word &b, const Scalar &lambda)
{
	Ranked rk(a, b, lambda);
	if (!rk.packed)
		return std::nullopt;
	const std::size_t m = a.size();
	const std::size_t n = b.size();
	return with_tables(rk, [&](auto &tables) {
		using Piece = typename std::remove_reference_t<decltype(tables)>::Piece;
		std::vector<std::size_t> wa(m + 1), wb(n + 1), t(m * n);
		for (std::size_t i = 0; i <= m; ++i)
			wa[i] = tables.word(suffix_key(rk, rk.ra, i));
		for (std::size_t j = 0; j <= n; ++j)
			wb[j] = tables.word(suffix_key(rk, rk.rb, j));
		std::vector<Piece> pieces;
		for (std::size_t i = m; i-- > 0;)
			for (std::size_t j = n; j-- > 0;)
			{
				const bool a_last = i + 1 == m;
				const bool b_last = j + 1 == n;
				pieces.clear();
				pieces.push_back({rk.ra[i], 0, a_last ? wb[j] : t[(i + 1) * n + j]});
				pieces.push_back({rk.rb[j], 0, b_last ? wa[i] : t[i * n + j + 1]});
				const std::size_t rest = a_last ? wb[j + 1] : b_last ? wa[i + 1] : t[(i + 1) * n + j + 1];
				if (!rk.merged.empty())
					for (std::size_t k = rk.start[i * n + j]; k < rk.start[i * n + j + 1]; ++k)
						pieces.push_back({rk.merged[k].first, rk.merged[k].second, rest});
				t[i * n + j] = tables.build(pieces);
			}
		return t[0];
	});
}

// Hoffman's recursion with 1 * w = w * 1 = w on packed words:
//   Q(i, j) = a[i] Q(i+1, j) + b[j] Q(i, j+1) + [a[i], b[j]] Q(i+1, j+1)
// with Q(m, j) = b[j..] and Q(i, n) = a[i..].
std::optional<LinComb> hoffman_packed(const Word &a, const Word &b)
{
	Ranked rk(a, b, one());
	if (!rk.packed)
		return std::nullopt;
	const std::size_t m = a.size();
	const std::size_t n = b.size();
	return with_tables(rk, [&](auto &tables) {
		using Piece = typename std::remove_reference_t<decltype(tables)>::Piece;
		std::vector<std::size_t> q((m + 1) * (n + 1));
		auto at = [&](std::size_t i, std::size_t j) { return i * (n + 1) + j; };
		for (std::size_t i = 0; i <= m; ++i)
			q[at(i, n)] = tables.word(suffix_key(rk, rk.ra, i));
		for (std::size_t j = 0; j < n; ++j)
			q[at(m, j)] = tables.word(suffix_key(rk, rk.rb, j));
		std::vector<Piece> pieces;
		for (std::size_t i = m; i-- > 0;)
			for (std::size_t j = n; j-- > 0;)
			{
				pieces.clear();
				pieces.push_back({rk.ra[i], 0, q[at(i + 1, j)]});
				pieces.push_back({rk.rb[j], 0, q[at(i, j + 1)]});
				for (std::size_t k = rk.start[i * n + j]; k < rk.start[i * n + j + 1]; ++k)
					pieces.push_back({rk.merged[k].first, rk.merged[k].second, q[at(i + 1, j + 1)]});
				q[at(i, j)] = tables.build(pieces);
			}
		return q[at(0, 0)];
	});
}

// Hoffman's recursion on LinCombs, memoized over suffix pairs.
LinComb hoffman_general(const Word &a, const Word &b)
{
	const std::size_t m = a.size();
	const std::size_t n = b.size();
	std::vector<std::optional<LinComb>> memo((m + 1) * (n + 1));
	auto rec = [&](auto &&self, std::size_t i, std::size_t j) -> const LinComb & {
		auto &slot = memo[i * (n + 1) + j];
		if (slot)
			return *slot;
		LinComb out;
		if (i == m)
			out.add(suffix(b, j), one());
		else if (j == n)
			out.add(suffix(a, i), one());
		else
		{
			add_prepended(out, a[i], self(self, i + 1, j));
			add_prepended(out, b[j], self(self, i, j + 1));
			add_prepended(out, letter_product(a[i], b[j]), self(self, i + 1, j + 1), one());
		}
		slot = std::move(out);
		return *slot;
	};
	return rec(rec, 0, 0);
}

} // namespace

std::string to_string(const Word &w, bool ascii)
{
	if (w.empty())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < w.size(); ++i)
	{
		if (i > 0)
			out += ascii ? "(x)" : "⊗";
		out += to_string(w[i]);
	}
	return out;
}

Word parse_word(std::string_view text)
{
	Word w;
	int depth = 0;
	std::size_t start = 0;
	for (std::size_t i = 0; i <= text.size(); ++i)
	{
		if (i < text.size() && text[i] == '(')
			++depth;
		else if (i < text.size() && text[i] == ')')
			--depth;
		else if (i == text.size() || (text[i] == ',' && depth == 0))
		{
			w.push_back(parse_letter(text.substr(start, i - start)));
			start = i + 1;
		}
	}
	if (depth != 0)
		throw std::invalid_argument("unbalanced parentheses in word '" + std::string(text) + "'");
	for (const auto &l : w)
		if (l.system != w.front().system)
			throw std::invalid_argument("word mixes letter systems: '" + std::string(text) + "'");
	return w;
}

void LinComb::add(const Word &w, const Scalar &c)
{
	if (c.zero())
		return;
	auto it = terms_.find(w);
	if (it == terms_.end())
		terms_.emplace(w, c);
	else
	{
		it->second += c;
		if (it->second.zero())
			terms_.erase(it);
	}
}

void LinComb::add(Word &&w, const Scalar &c)
{
	if (c.zero())
		return;
	auto [it, inserted] = terms_.try_emplace(std::move(w), c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.zero())
			terms_.erase(it);
	}
}

LinComb::LinComb(Terms terms) : terms_(std::move(terms))
{
	std::erase_if(terms_, [](const auto &t) { return t.second.zero(); });
}

Scalar LinComb::coefficient(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Scalar() : it->second;
}

LinComb &LinComb::operator+=(const LinComb &o)
{
	for (const auto &[w, c] : o.terms_)
		add(w, c);
	return *this;
}

LinComb &LinComb::operator-=(const LinComb &o)
{
	for (const auto &[w, c] : o.terms_)
		add(w, -c);
	return *this;
}

LinComb LinComb::scaled(const Scalar &c) const
{
	LinComb out;
	if (c.zero())
		return out;
	for (const auto &[w, d] : terms_)
		out.add(w, d * c);
	return out;
}

std::optional<LetterSystem> LinComb::system() const
{
	for (const auto &[w, c] : terms_)
		if (!w.empty())
			return w.front().system;
	return std::nullopt;
}

std::string to_string(const LinComb &c, bool ascii)
{
	if (c.zero())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[w, coef] : c.terms())
	{
		std::string cs;
		bool negative = false;
		if (coef.is_constant())
		{
			const Rational r = coef.coefficient(0);
			negative = sgn(r) < 0;
			const Rational mag = abs(r);
			if (mag != 1 || w.empty())
				cs = to_string(mag);
		}
		else
			cs = "(" + to_string(coef) + ")";
		std::string term = cs;
		if (!w.empty())
			term += (cs.empty() ? "" : "*") + to_string(w, ascii);
		if (first)
			out = (negative ? "-" : "") + term;
		else
			out += (negative ? " - " : " + ") + term;
		first = false;
	}
	return out;
}

LinComb mixable_shuffle(const Word &a, const Word &b, const Scalar &lambda)
{
	check_weight(common_system(a, b), lambda);
	if (auto packed = mixable_packed(a, b, lambda))
		return std::move(*packed);
	return mixable_walk(a, b, lambda);
}

LinComb mixable_shuffle_direct(const Word &a, const Word &b, const Scalar &lambda)
{
	check_weight(common_system(a, b), lambda);
	const std::size_t m = a.size();
	const std::size_t n = b.size();
	if (m + n > 30)
		throw std::invalid_argument("words too long for direct enumeration");

	// Position sets of a and b in an output word of length len; they cover
	// every position and overlap exactly in the merged positions.
	LinComb out;
	const std::size_t min_len = lambda.zero() ? m + n : std::max(m, n);
	for (std::size_t len = min_len; len <= m + n; ++len)
	{
		const std::size_t merged = m + n - len;
		const std::uint32_t full = (std::uint32_t{1} << len) - 1;
		for (std::uint32_t amask = 0; amask <= full; ++amask)
		{
			if (static_cast<std::size_t>(std::popcount(amask)) != m)
				continue;
			const std::uint32_t bonly = full & ~amask;
			// every `merged`-subset of amask joins b's positions
			for (std::uint32_t sub = amask;; sub = (sub - 1) & amask)
			{
				if (static_cast<std::size_t>(std::popcount(sub)) == merged)
				{
					const std::uint32_t bmask = bonly | sub;
					// Expand letter by letter; merged positions can branch.
					std::vector<std::pair<Word, Scalar>> partial{{Word{}, one()}};
					std::size_t ia = 0;
					std::size_t ib = 0;
					for (std::size_t p = 0; p < len; ++p)
					{
						const bool in_a = (amask >> p) & 1U;
						const bool in_b = (bmask >> p) & 1U;
						if (in_a && in_b)
						{
							const LetterComb prod = letter_product(a[ia++], b[ib++]);
							std::vector<std::pair<Word, Scalar>> next;
							for (const auto &[w, c] : partial)
								for (const auto &[l, d] : prod)
								{
									Word nw = w;
									nw.push_back(l);
									next.emplace_back(std::move(nw), c * d * lambda);
								}
							partial = std::move(next);
						}
						else
						{
							const Letter &l = in_a ? a[ia++] : b[ib++];
							for (auto &[w, c] : partial)
								w.push_back(l);
						}
					}
					for (auto &[w, c] : partial)
						out.add(std::move(w), c);
				}
				if (sub == 0)
					break;
			}
		}
	}
	return out;
}

LinComb quasi_shuffle(const Word &a, const Word &b)
{
	if (a.empty())
		return LinComb(b);
	if (b.empty())
		return LinComb(a);
	common_system(a, b);
	if (auto packed = hoffman_packed(a, b))
		return std::move(*packed);
	return hoffman_general(a, b);
}

LinComb quasi_shuffle(const LinComb &a, const LinComb &b)
{
	LinComb out;
	for (const auto &[wa, ca] : a.terms())
		for (const auto &[wb, cb] : b.terms())
			out += quasi_shuffle(wa, wb).scaled(ca * cb);
	return out;
}

LinComb mixable_shuffle(const LinComb &a, const LinComb &b, const Scalar &lambda)
{
	LinComb out;
	for (const auto &[wa, ca] : a.terms())
		for (const auto &[wb, cb] : b.terms())
		{
			const Scalar c = ca * cb;
			if (wa.empty())
				out.add(wb, c);
			else if (wb.empty())
				out.add(wa, c);
			else
				out += mixable_shuffle(wa, wb, lambda).scaled(c);
		}
	return out;
}

ShaElement::ShaElement(LinComb terms) : terms_(std::move(terms))
{
	for (const auto &[w, c] : terms_.terms())
		if (w.empty())
			throw std::invalid_argument("Sha element terms need a head letter");
}

ShaElement ShaElement::embed(const Letter &a) { return ShaElement(LinComb(Word{a})); }

ShaElement ShaElement::scalar(LetterSystem system, const Scalar &c)
{
	return ShaElement(LinComb(Word{Letter::make_unit(system)}, c));
}

ShaElement ShaElement::pure_tensor(const Word &w)
{
	if (w.empty())
		throw std::invalid_argument("pure tensor needs at least one letter");
	return ShaElement(LinComb(w));
}

ShaElement &ShaElement::operator+=(const ShaElement &o)
{
	terms_ += o.terms_;
	return *this;
}

ShaElement &ShaElement::operator-=(const ShaElement &o)
{
	terms_ -= o.terms_;
	return *this;
}

ShaElement operator*(const ShaElement &a, const Rational &r)
{
	ShaElement out;
	out.terms_ = a.terms_.scaled(Scalar(r));
	return out;
}

std::string to_string(const ShaElement &x, bool ascii) { return to_string(x.terms(), ascii); }

ShaElement sha_product(const ShaElement &x, const ShaElement &y, const Scalar &lambda)
{
	const auto sx = x.terms().system();
	const auto sy = y.terms().system();
	if (sx && sy && *sx != *sy)
		throw std::invalid_argument("Sha product across letter systems");
	if (sx)
		check_weight(*sx, lambda);

	LinComb out;
	for (const auto &[wx, cx] : x.terms().terms())
	{
		const Word tx = suffix(wx, 1);
		for (const auto &[wy, cy] : y.terms().terms())
		{
			const LetterComb heads = letter_product(wx.front(), wy.front());
			if (heads.empty())
				continue;
			const Word ty = suffix(wy, 1);
			LinComb tails;
			if (tx.empty())
				tails.add(ty, one());
			else if (ty.empty())
				tails.add(tx, one());
			else
				tails = mixable_shuffle(tx, ty, lambda);
			add_prepended(out, heads, tails, cx * cy);
		}
	}
	return ShaElement(std::move(out));
}

ShaElement rb_operator(const ShaElement &x)
{
	LinComb out;
	for (const auto &[w, c] : x.terms().terms())
		out.add(prepend(Letter::make_unit(w.front().system), w), c);
	return ShaElement(std::move(out));
}

ShaElement star_product(const ShaElement &u, const ShaElement &v, const Scalar &lambda)
{
	ShaElement out = sha_product(u, rb_operator(v), lambda) + sha_product(rb_operator(u), v, lambda);
	if (!lambda.zero())
		out += ShaElement(sha_product(u, v, lambda).terms().scaled(lambda));
	return out;
}

} // namespace rbx
