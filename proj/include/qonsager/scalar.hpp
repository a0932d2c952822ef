#pragma once

#include "qonsager/intpoly.hpp"

#include <string>

namespace qons {

// Element of Q(q, c) as a reduced fraction num/den of polynomials in Z[q, c].
// Canonical: gcd(num, den) = 1 including integer content, and the deglex
// leading coefficient of den is positive. Zero is 0/1.
class Scalar
{
	IntPoly num_;
	IntPoly den_{1};

	struct Raw
	{};
	Scalar(IntPoly num, IntPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

  public:
	Scalar() = default;
	Scalar(long k) : num_(k) {}
	Scalar(int k) : num_(long(k)) {}
	Scalar(mpz_class const &k) : num_(k) {}
	Scalar(mpq_class const &k);
	Scalar(IntPoly num) : num_(std::move(num)) {}
	Scalar(IntPoly num, IntPoly den);

	static Scalar q() { return Scalar(IntPoly::q()); }
	static Scalar c() { return Scalar(IntPoly::c()); }
	// q^n for any integer n
	static Scalar q_pow(long n);

	IntPoly const &num() const { return num_; }
	IntPoly const &den() const { return den_; }
	bool is_zero() const { return num_.is_zero(); }
	bool is_one() const { return num_.is_one() && den_.is_one(); }
	bool is_polynomial() const { return den_.is_one(); }

	Scalar operator-() const { return Scalar(-num_, den_, Raw{}); }
	Scalar inverse() const;
	Scalar pow(long n) const;

	Scalar &operator+=(Scalar const &b);
	Scalar &operator-=(Scalar const &b);
	Scalar &operator*=(Scalar const &b);
	Scalar &operator/=(Scalar const &b);

	friend Scalar operator+(Scalar a, Scalar const &b) { return a += b; }
	friend Scalar operator-(Scalar a, Scalar const &b) { return a -= b; }
	friend Scalar operator*(Scalar const &a, Scalar const &b);
	friend Scalar operator/(Scalar const &a, Scalar const &b);

	bool operator==(Scalar const &b) const
	{
		return num_ == b.num_ && den_ == b.den_;
	}

	// parseable text, e.g. "(q^2 + 1)/q"
	std::string str() const;
	// true when str() needs parentheses as a factor of a product
	bool is_compound() const;
};

// [n]_q = (q^n - q^-n)/(q - q^-1)
Scalar qint(long n);
Scalar qbinom(long a, long b);

// exact value at (q0, c0); PoleError if the denominator vanishes
mpq_class evaluate(Scalar const &s, mpq_class const &q0, mpq_class const &c0);
// numerator vanishes identically in c at q = 1; PoleError on a pole at q = 1
bool vanishes_at_q1(Scalar const &s);

} // namespace qons
