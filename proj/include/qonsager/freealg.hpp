#pragma once

#include "qonsager/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qons {

// Word over {g0, g1}, packed: the i-th letter from the left sits at bit
// len-1-i, with g0 stored as 1 and g1 as 0. Comparing (len, bits) is then the
// deglex order with g0 > g1, and equal words are equal values.
struct Word
{
	uint64_t bits = 0;
	uint8_t len = 0;

	static constexpr int max_length = 64;

	static Word letter(int g) { return Word{g == 0 ? 1u : 0u, 1}; }
	static Word from_letters(std::vector<int> const &gs);

	// generator index (0 or 1) of the i-th letter
	int at(int i) const { return ((bits >> (len - 1 - i)) & 1) ? 0 : 1; }
	Word sub(int pos, int n) const
	{
		uint64_t m = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
		return Word{(bits >> (len - pos - n)) & m, uint8_t(n)};
	}
	// position of the leftmost occurrence of w as a factor, or -1
	int find(Word w) const;
	int count(int g) const;

	friend Word operator*(Word a, Word b);
	bool operator==(Word const &) const = default;
	std::strong_ordering operator<=>(Word const &b) const
	{
		if (len != b.len)
			return len <=> b.len;
		return bits <=> b.bits;
	}

	// "B0*B1*B1"; the empty word is "1"
	std::string str() const;
	// "B0B1B1"; the empty word is "1"
	std::string compact() const;
	static Word parse_compact(std::string const &s);
};

struct WordHash
{
	size_t operator()(Word const &w) const
	{
		return std::hash<uint64_t>()(w.bits * 0x9e3779b97f4a7c15ull + w.len);
	}
};

// Scalar-linear combination of words, terms kept in descending monomial order.
class NcPoly
{
	std::vector<std::pair<Word, Scalar>> terms_;

  public:
	NcPoly() = default;
	NcPoly(Scalar const &s);
	NcPoly(Word w, Scalar s = 1);
	static NcPoly generator(int g) { return NcPoly(Word::letter(g)); }
	// sorts and combines, drops zeros
	static NcPoly from_terms(std::vector<std::pair<Word, Scalar>> terms);

	auto const &terms() const { return terms_; }
	size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	int degree() const; // maximal word length, -1 for zero
	Scalar coeff(Word w) const;

	NcPoly operator-() const;
	NcPoly &operator+=(NcPoly const &b);
	NcPoly &operator-=(NcPoly const &b);
	NcPoly &operator*=(Scalar const &s);
	friend NcPoly operator+(NcPoly a, NcPoly const &b) { return a += b; }
	friend NcPoly operator-(NcPoly a, NcPoly const &b) { return a -= b; }
	friend NcPoly operator*(NcPoly const &a, NcPoly const &b);
	friend NcPoly operator*(Scalar const &s, NcPoly a) { return a *= s; }
	friend NcPoly operator*(NcPoly a, Scalar const &s) { return a *= s; }
	bool operator==(NcPoly const &b) const = default;

	std::string str() const;
};

NcPoly p_commutator(NcPoly const &x, NcPoly const &y, Scalar const &p = 1);
NcPoly homogeneous_component(NcPoly const &x, int d);
// appends "k*body" to a sum being rendered; an empty body is the unit
void append_term(std::string &out, Scalar const &k, std::string const &body);
NcPoly pow(NcPoly const &x, int n);

// Algebra endomorphism of the free algebra given by the images of g0 and g1.
// Word images and powers are memoized in a cache shared between copies.
class AlgebraMorphism
{
	struct Cache;
	NcPoly image_[2];
	std::shared_ptr<Cache> cache_;

  public:
	AlgebraMorphism(NcPoly image_g0, NcPoly image_g1);
	static AlgebraMorphism identity();

	NcPoly const &image(int g) const { return image_[g]; }
	NcPoly apply(NcPoly const &x) const;
	NcPoly apply(Word w) const;
	bool operator==(AlgebraMorphism const &b) const
	{
		return image_[0] == b.image_[0] && image_[1] == b.image_[1];
	}
	// f.power(n) = f∘...∘f
	AlgebraMorphism power(int n) const;
};

// (f∘g)(x) = f(g(x))
AlgebraMorphism compose(AlgebraMorphism const &f, AlgebraMorphism const &g);
inline NcPoly apply_morphism(AlgebraMorphism const &f, NcPoly const &x)
{
	return f.apply(x);
}
inline AlgebraMorphism morphism_power(AlgebraMorphism const &f, int n)
{
	return f.power(n);
}

enum class CMode
{
	generic,
	zero
};

std::string to_string(CMode m);

// the two q-Dolan-Grady relations moved to one side; with CMode::zero the
// c-terms are dropped, leaving the q-Serre relations
std::pair<NcPoly, NcPoly> defining_relations(CMode mode);

} // namespace qons
