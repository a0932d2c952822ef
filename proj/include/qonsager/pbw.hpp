#pragma once

#include "qonsager/qonsager.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qons {

// real0 ascending, then imaginary descending, then real1 descending
std::strong_ordering root_compare(Root const &a, Root const &b);

// ordered product of root vectors, stored with repetition
class PBWMonomial
{
	std::vector<Root> roots_;

  public:
	PBWMonomial() = default;
	explicit PBWMonomial(Root const &r) : roots_{r} {}
	// std::invalid_argument unless weakly increasing under root_compare
	static PBWMonomial from_roots(std::vector<Root> roots);

	std::vector<Root> const &roots() const { return roots_; }
	std::vector<std::pair<Root, int>> factors() const;
	bool is_unit() const { return roots_.empty(); }
	int height() const;
	// "B0^2*B(1,d)"; the unit renders as ""
	std::string str() const;

	auto operator<=>(PBWMonomial const &) const = default;
};

// rendering order: larger height first, then lexicographic under root_compare
struct PBWOrder
{
	bool operator()(PBWMonomial const &a, PBWMonomial const &b) const;
};

class PBWElement
{
	std::map<PBWMonomial, Scalar, PBWOrder> terms_;

  public:
	PBWElement() = default;
	PBWElement(Scalar const &s);
	PBWElement(PBWMonomial const &m, Scalar const &s = 1);
	explicit PBWElement(Root const &r) : PBWElement(PBWMonomial(r)) {}

	auto const &terms() const { return terms_; }
	size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	int height() const;
	Scalar coeff(PBWMonomial const &m) const;

	PBWElement operator-() const;
	PBWElement &operator+=(PBWElement const &b);
	PBWElement &operator-=(PBWElement const &b);
	friend PBWElement operator+(PBWElement a, PBWElement const &b) { return a += b; }
	friend PBWElement operator-(PBWElement a, PBWElement const &b) { return a -= b; }
	friend PBWElement operator*(Scalar const &s, PBWElement const &x);
	// pbw_multiply
	friend PBWElement operator*(PBWElement const &x, PBWElement const &y);
	bool operator==(PBWElement const &b) const = default;

	std::string str() const;
};

// a^m_p, 1 <= p <= m/2
Scalar coeff_a(int p, int m);
// b^(m)_p, 1 <= p <= m
Scalar coeff_b(int p, int m);

// C_m and D_m in ordered form
PBWElement c_ordered(int m);
PBWElement d_ordered(int m);

// B_g B_h in PBW normal form for h < g or h == g; std::invalid_argument
// when the pair is already ordered
PBWElement straighten(Root const &g, Root const &h);

// leftmost out-of-order pair first
PBWElement pbw_multiply(PBWElement const &x, PBWElement const &y);

// each monomial becomes the product of its root vectors
NcPoly expand_to_free(PBWElement const &x);

// the PBW element equal to x in the algebra, built letter by letter with
// pbw_multiply
PBWElement lift_to_pbw(NcPoly const &x);

// right-hand sides of the commutator formulas
// [B(r,a1), B(r+m,a1)]_{q^-2}
PBWElement q_commutator_real1(int r, int m);
// [B(r+m,a0), B(r,a0)]_{q^-2}
PBWElement q_commutator_real0(int r, int m);
// [B(r,a0), B(s,a1)]_{q^-2}
PBWElement q_commutator_mixed(int r, int s);
// [B(p,a1), B(m,d)]
PBWElement commutator_real1_imag(int p, int m);
// [B(m,d), B(p,a0)]
PBWElement commutator_imag_real0(int m, int p);

// [B(r,a1), B(r+m,a1)]_{q^-2} + B(m,d)
PBWElement correction_real(int r, int m);
// [B(m,d), B(p,a_i)] minus its leading terms
PBWElement correction_imag(int p, int m, int i);

// s = s0 + s1 c with s0, s1 free of c; nullopt when s is not of that shape
std::optional<std::pair<Scalar, Scalar>> c_linear_split(Scalar const &s);
// every coefficient splits and both parts vanish at q = 1
bool coefficients_in_q_minus_1(PBWElement const &x);

// root vectors of U+ on the letters E0 = g0, E1 = g1
NcPoly damiani_root_vector(Root const &g);

struct TopComponentReport
{
	bool pass = false;
	int c_power = 0; // c^-c_power times the Damiani vector
	std::string failure;
	NcPoly witness;
};

// serre must be a zero-mode system completed to at least the height
TopComponentReport check_top_component(Root const &g, RewriteSystem const &serre);

// all ordered monomials of exactly this height
std::vector<PBWMonomial> pbw_monomials(int height);

struct IndependenceReport
{
	bool pass = false;
	long monomials = 0;
	long rank = 0;
	long normal_words = 0;
	// the rank was certified at a rational point rather than over Q(q, c)
	bool specialized = false;
};

IndependenceReport independence_check(int max_height, RewriteSystem const &sys);

} // namespace qons
