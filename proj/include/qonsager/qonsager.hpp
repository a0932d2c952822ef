#pragma once

#include "qonsager/rewrite.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qons {

enum class RootKind
{
	real0,
	imaginary,
	real1
};

// Positive root: real0(n) is n d + a0, imaginary(m) is m d, real1(n) is
// n d + a1.
struct Root
{
	RootKind kind = RootKind::real0;
	int n = 0;

	static Root real0(int n) { return {RootKind::real0, n}; }
	static Root imaginary(int m) { return {RootKind::imaginary, m}; }
	static Root real1(int n) { return {RootKind::real1, n}; }
	// unified real index: j >= 0 is real1(j), j < 0 is real0(-j-1)
	static Root real(int j) { return j >= 0 ? real1(j) : real0(-j - 1); }

	bool is_real() const { return kind != RootKind::imaginary; }
	// inverse of real()
	int real_index() const { return kind == RootKind::real1 ? n : -n - 1; }
	int height() const { return kind == RootKind::imaginary ? 2 * n : 2 * n + 1; }
	// "B0", "B1", "B(2,a0)", "B(1,d)", "B(3,a1)"
	std::string str() const;

	// structural order for use as a key; the PBW order is root_compare
	auto operator<=>(Root const &) const = default;
};

enum class Family
{
	a0,
	a1,
	d
};

// k d + a_i for any integer k, with k < 0 mapped by k -> -k-1 and the other
// family; for d, k must be positive
Root normalize_root(Family f, int k);

// "Phi", "T0", "T0inv", "T1", "T1inv"; std::invalid_argument otherwise
AlgebraMorphism const &named_morphism(std::string const &name);
// T0 after Phi
AlgebraMorphism const &t0phi();

// Noncommutative polynomial in the real root vector symbols Y_j (see
// Root::real). T0 Phi acts on the symbols by Y_j -> Y_{j-1}; realize()
// substitutes the root vectors.
class SymPoly
{
	std::map<std::vector<int>, Scalar> terms_;

  public:
	SymPoly() = default;
	SymPoly(Scalar const &s);
	static SymPoly y(int j);

	auto const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	SymPoly operator-() const;
	SymPoly &operator+=(SymPoly const &b);
	SymPoly &operator-=(SymPoly const &b);
	friend SymPoly operator+(SymPoly a, SymPoly const &b) { return a += b; }
	friend SymPoly operator-(SymPoly a, SymPoly const &b) { return a -= b; }
	friend SymPoly operator*(SymPoly const &a, SymPoly const &b);
	friend SymPoly operator*(Scalar const &s, SymPoly const &a);
	bool operator==(SymPoly const &b) const = default;

	// (T0 Phi)^k
	SymPoly shift(int k) const;
	NcPoly realize() const;
	std::string str() const;
};

SymPoly commutator(SymPoly const &x, SymPoly const &y);

// the elements below as polynomials in the real root vectors
SymPoly sym_imaginary(int m);
SymPoly sym_c(int m);
SymPoly sym_d(int m);
SymPoly sym_f(int n);
SymPoly sym_r(int n);
// right-hand side of the closed form of R_n
SymPoly sym_r_closed(int n);

// memoized; word length equals the height
NcPoly const &root_vector(Root const &g);
NcPoly c_element(int m);
NcPoly d_element(int m);
NcPoly f_element(int n);
NcPoly r_element(int n);

struct IdentityReport
{
	bool pass = false;
	int degree = 0;      // maximal word length of lhs - rhs
	size_t terms = 0;    // terms of lhs - rhs
	size_t nf_terms = 0; // terms of its normal form
	NcPoly witness;      // the normal form when nonzero
};

// BoundExceeded when lhs - rhs is above the completed degree
IdentityReport verify_identity(NcPoly const &lhs, NcPoly const &rhs,
                               RewriteSystem const &sys);

} // namespace qons
