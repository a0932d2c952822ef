#pragma once

#include "qonsager/pbw.hpp"

#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

namespace qons {

// a + b i with a, b rational
struct Gaussian
{
	mpq_class re, im;

	Gaussian() = default;
	Gaussian(mpq_class re, mpq_class im = 0) : re(std::move(re)), im(std::move(im)) {}
	Gaussian(long k) : re(k) {}
	static Gaussian i() { return Gaussian(0, 1); }

	bool is_zero() const { return re == 0 && im == 0; }
	Gaussian operator-() const { return Gaussian(-re, -im); }
	friend Gaussian operator+(Gaussian const &a, Gaussian const &b)
	{
		return Gaussian(a.re + b.re, a.im + b.im);
	}
	friend Gaussian operator-(Gaussian const &a, Gaussian const &b)
	{
		return Gaussian(a.re - b.re, a.im - b.im);
	}
	friend Gaussian operator*(Gaussian const &a, Gaussian const &b)
	{
		return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
	}
	bool operator==(Gaussian const &b) const { return re == b.re && im == b.im; }
	std::string str() const;
};

// A(n) for any integer n, G(m) for m >= 1
struct LieBasis
{
	bool imaginary = false;
	int n = 0;
	auto operator<=>(LieBasis const &) const = default;
	std::string str() const;
};

class LieElement
{
	std::map<LieBasis, Gaussian> terms_;

  public:
	LieElement() = default;
	static LieElement A(int n);
	// G(0) = 0 and G(-m) = -G(m)
	static LieElement G(int m);

	auto const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	LieElement &operator+=(LieElement const &b);
	LieElement &operator-=(LieElement const &b);
	friend LieElement operator+(LieElement a, LieElement const &b) { return a += b; }
	friend LieElement operator-(LieElement a, LieElement const &b) { return a -= b; }
	friend LieElement operator*(Gaussian const &s, LieElement const &x);
	bool operator==(LieElement const &b) const = default;
	std::string str() const;
};

// [A_n, A_m] = 4 G_{n-m}, [G_n, G_m] = 0, [G_m, A_n] = 2 A_{n+m} - 2 A_{n-m}
LieElement bracket(LieElement const &x, LieElement const &y);

struct CheckLine
{
	std::string name;
	bool pass = false;
};

struct DolanGradyReport
{
	bool pass = false;
	std::vector<CheckLine> lines;
};

DolanGradyReport check_dolan_grady();

// the q = 1, c = 1 image of a root vector
LieElement specialize_root(Root const &g);

// the q = 1, c = 1 image of a PBW element; products of two or more roots
// and constants must specialize to 0, otherwise std::domain_error
LieElement specialize(PBWElement const &x);

struct SpecializationReport
{
	bool pass = false;
	LieElement quantum; // specialized B_g B_h - B_h B_g
	LieElement classical;
	std::string failure;
};

SpecializationReport specialization_check(Root const &g, Root const &h);

} // namespace qons
