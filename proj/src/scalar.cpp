#include "qonsager/scalar.hpp"
#include "qonsager/errors.hpp"

namespace qons {

namespace {

IntPoly quotient(IntPoly const &a, IntPoly const &b)
{
	if (b.is_one())
		return a;
	return *a.divide(b);
}

} // namespace

Scalar::Scalar(mpq_class const &k)
    : num_(mpz_class(k.get_num())), den_(mpz_class(k.get_den()))
{}

Scalar::Scalar(IntPoly num, IntPoly den)
{
	if (den.is_zero())
		throw DivisionByZero();
	if (num.is_zero())
		return;
	if (!den.is_one())
	{
		IntPoly g = gcd(num, den);
		if (!g.is_one())
		{
			num = quotient(num, g);
			den = quotient(den, g);
		}
		if (den.lead().k < 0)
		{
			num = -num;
			den = -den;
		}
	}
	num_ = std::move(num);
	den_ = std::move(den);
}

Scalar Scalar::q_pow(long n)
{
	if (n >= 0)
		return Scalar(IntPoly::monomial(1, uint32_t(n), 0));
	return Scalar(IntPoly(1), IntPoly::monomial(1, uint32_t(-n), 0), Raw{});
}

Scalar Scalar::inverse() const
{
	if (is_zero())
		throw DivisionByZero();
	if (num_.lead().k < 0)
		return Scalar(-den_, -num_, Raw{});
	return Scalar(den_, num_, Raw{});
}

Scalar Scalar::pow(long n) const
{
	if (n < 0)
		return inverse().pow(-n);
	Scalar r = 1, b = *this;
	while (n)
	{
		if (n & 1)
			r *= b;
		n >>= 1;
		if (n)
			b *= b;
	}
	return r;
}

Scalar &Scalar::operator+=(Scalar const &b)
{
	if (b.is_zero())
		return *this;
	if (is_zero())
		return *this = b;
	if (den_.is_one() && b.den_.is_one())
	{
		num_ += b.num_;
		return *this;
	}
	if (den_ == b.den_)
	{
		IntPoly n = num_ + b.num_;
		if (n.is_zero())
			return *this = Scalar();
		IntPoly g = gcd(n, den_);
		if (g.is_one())
			num_ = std::move(n);
		else
		{
			num_ = quotient(n, g);
			den_ = quotient(den_, g);
		}
		return *this;
	}
	IntPoly g = gcd(den_, b.den_);
	if (g.is_one())
	{
		num_ = num_ * b.den_ + b.num_ * den_;
		den_ = den_ * b.den_;
		return *this;
	}
	IntPoly da = quotient(den_, g), db = quotient(b.den_, g);
	IntPoly n = num_ * db + b.num_ * da;
	if (n.is_zero())
		return *this = Scalar();
	IntPoly t = gcd(n, g);
	num_ = quotient(n, t);
	den_ = da * quotient(b.den_, t);
	return *this;
}

Scalar &Scalar::operator-=(Scalar const &b)
{
	return *this += -b;
}

Scalar operator*(Scalar const &a, Scalar const &b)
{
	if (a.is_zero() || b.is_zero())
		return Scalar();
	if (a.den_.is_one() && b.den_.is_one())
		return Scalar(a.num_ * b.num_);
	IntPoly g1 = b.den_.is_one() ? IntPoly(1) : gcd(a.num_, b.den_);
	IntPoly g2 = a.den_.is_one() ? IntPoly(1) : gcd(b.num_, a.den_);
	return Scalar(quotient(a.num_, g1) * quotient(b.num_, g2),
	              quotient(a.den_, g2) * quotient(b.den_, g1), Scalar::Raw{});
}

Scalar operator/(Scalar const &a, Scalar const &b)
{
	return a * b.inverse();
}

Scalar &Scalar::operator*=(Scalar const &b)
{
	return *this = *this * b;
}

Scalar &Scalar::operator/=(Scalar const &b)
{
	return *this = *this / b;
}

bool Scalar::is_compound() const
{
	return den_.is_one() && num_.size() > 1;
}

std::string Scalar::str() const
{
	if (den_.is_one())
		return num_.str();
	std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
	auto const &t = den_.lead();
	bool bare = den_.is_monomial() && t.k == 1 && (t.eq == 0 || t.ec == 0);
	bare = bare || den_.is_constant();
	return n + "/" + (bare ? den_.str() : "(" + den_.str() + ")");
}

Scalar qint(long n)
{
	if (n == 0)
		return Scalar();
	return (Scalar::q_pow(n) - Scalar::q_pow(-n)) /
	       (Scalar::q() - Scalar::q_pow(-1));
}

Scalar qbinom(long a, long b)
{
	if (b < 0 || a < b)
		throw std::invalid_argument("qbinom requires 0 <= b <= a");
	Scalar r = 1;
	for (long i = 1; i <= b; ++i)
		r = r * qint(a - b + i) / qint(i);
	return r;
}

mpq_class evaluate(Scalar const &s, mpq_class const &q0, mpq_class const &c0)
{
	mpq_class d = s.den().eval(q0, c0);
	if (d == 0)
		throw PoleError("pole at q = " + q0.get_str() + ", c = " + c0.get_str() +
		                " in " + s.str());
	return s.num().eval(q0, c0) / d;
}

bool vanishes_at_q1(Scalar const &s)
{
	if (s.den().subs_q1().is_zero())
		throw PoleError("pole at q = 1 in " + s.str());
	return s.num().subs_q1().is_zero();
}

} // namespace qons
