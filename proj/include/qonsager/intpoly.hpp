#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace qons {

struct Term
{
	uint32_t eq = 0; // exponent of q
	uint32_t ec = 0; // exponent of c
	mpz_class k;
};

// sort key: descending order of the key is deglex with q before c
inline uint64_t term_key(uint32_t eq, uint32_t ec)
{
	return (uint64_t(eq + ec) << 32) | eq;
}

// Polynomial in Z[q, c], terms sorted by descending deglex.
class IntPoly
{
	std::vector<Term> terms_;

  public:
	IntPoly() = default;
	IntPoly(long k);
	IntPoly(mpz_class const &k);

	static IntPoly monomial(mpz_class const &k, uint32_t eq, uint32_t ec);
	static IntPoly q() { return monomial(1, 1, 0); }
	static IntPoly c() { return monomial(1, 0, 1); }
	// combines duplicates and drops zeros
	static IntPoly from_terms(std::vector<Term> terms);

	std::vector<Term> const &terms() const { return terms_; }
	size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	bool is_one() const;
	bool is_constant() const;
	bool is_monomial() const { return terms_.size() == 1; }
	Term const &lead() const { return terms_.front(); }

	uint32_t deg_q() const;
	uint32_t deg_c() const;
	uint32_t min_q() const;
	uint32_t min_c() const;
	mpz_class content() const;

	IntPoly operator-() const;
	IntPoly &operator+=(IntPoly const &b);
	IntPoly &operator-=(IntPoly const &b);
	IntPoly operator*(mpz_class const &k) const;
	IntPoly divexact(mpz_class const &k) const;
	IntPoly mul_monomial(uint32_t eq, uint32_t ec) const;
	IntPoly div_monomial(uint32_t eq, uint32_t ec) const;
	std::optional<IntPoly> divide(IntPoly const &b) const;

	mpq_class eval(mpq_class const &q0, mpq_class const &c0) const;
	IntPoly subs_q1() const;

	bool operator==(IntPoly const &b) const;
	std::string str() const;
};

IntPoly operator+(IntPoly a, IntPoly const &b);
IntPoly operator-(IntPoly a, IntPoly const &b);
IntPoly operator*(IntPoly const &a, IntPoly const &b);

// gcd over Z[q,c], leading coefficient positive
IntPoly gcd(IntPoly const &a, IntPoly const &b);
// slow primitive-remainder-sequence gcd, independent of the heuristic path
IntPoly gcd_prs(IntPoly const &a, IntPoly const &b);
// heuristic gcd only; nullopt when it gives up
std::optional<IntPoly> gcd_heuristic(IntPoly const &a, IntPoly const &b);

} // namespace qons
