#include "qonsager/classical.hpp"
#include "qonsager/errors.hpp"

#include <stdexcept>

namespace qons {

std::string Gaussian::str() const
{
	if (im == 0)
		return re.get_str();
	std::string i = im == 1 ? "i" : im == -1 ? "-i" : im.get_str() + "*i";
	if (re == 0)
		return i;
	return "(" + re.get_str() + (im > 0 ? " + " : " - ") +
	       (abs(im) == 1 ? std::string("i") : mpq_class(abs(im)).get_str() + "*i") + ")";
}

std::string LieBasis::str() const
{
	return (imaginary ? "G(" : "A(") + std::to_string(n) + ")";
}

LieElement LieElement::A(int n)
{
	LieElement x;
	x.terms_[{false, n}] = Gaussian(1);
	return x;
}

LieElement LieElement::G(int m)
{
	LieElement x;
	if (m > 0)
		x.terms_[{true, m}] = Gaussian(1);
	else if (m < 0)
		x.terms_[{true, -m}] = Gaussian(-1);
	return x;
}

LieElement &LieElement::operator+=(LieElement const &b)
{
	for (auto const &[k, s] : b.terms_)
	{
		Gaussian v = terms_[k] + s;
		if (v.is_zero())
			terms_.erase(k);
		else
			terms_[k] = v;
	}
	return *this;
}

LieElement &LieElement::operator-=(LieElement const &b)
{
	return *this += Gaussian(-1) * b;
}

LieElement operator*(Gaussian const &s, LieElement const &x)
{
	LieElement r;
	if (s.is_zero())
		return r;
	for (auto const &[k, t] : x.terms_)
		r.terms_[k] = s * t;
	return r;
}

std::string LieElement::str() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	for (auto const &[k, v] : terms_)
	{
		if (!s.empty())
			s += " + ";
		s += v.str() + "*" + k.str();
	}
	return s;
}

namespace {

LieElement basis_bracket(LieBasis const &a, LieBasis const &b)
{
	using L = LieElement;
	if (!a.imaginary && !b.imaginary)
		return Gaussian(4) * L::G(a.n - b.n);
	if (a.imaginary && b.imaginary)
		return L();
	if (a.imaginary)
		return Gaussian(2) * L::A(b.n + a.n) - Gaussian(2) * L::A(b.n - a.n);
	return Gaussian(-1) * basis_bracket(b, a);
}

} // namespace

LieElement bracket(LieElement const &x, LieElement const &y)
{
	LieElement r;
	for (auto const &[a, s] : x.terms())
		for (auto const &[b, t] : y.terms())
			r += (s * t) * basis_bracket(a, b);
	return r;
}

DolanGradyReport check_dolan_grady()
{
	using L = LieElement;
	auto br = [](L const &x, L const &y) { return bracket(x, y); };
	Gaussian half_i(0, mpq_class(1, 2));
	L a0 = L::A(0), a1 = L::A(1);
	L d0 = -half_i * L::A(-1), d1 = half_i * L::A(0);

	DolanGradyReport rep;
	auto add = [&](std::string name, L const &x) {
		rep.lines.push_back({std::move(name), x.is_zero()});
	};
	add("[A0,[A0,[A0,A1]]] = 16[A0,A1]",
	    br(a0, br(a0, br(a0, a1))) - Gaussian(16) * br(a0, a1));
	add("[A1,[A1,[A1,A0]]] = 16[A1,A0]",
	    br(a1, br(a1, br(a1, a0))) - Gaussian(16) * br(a1, a0));
	add("[D0,[D0,[D0,D1]]] = -4[D0,D1]",
	    br(d0, br(d0, br(d0, d1))) + Gaussian(4) * br(d0, d1));
	add("[D1,[D1,[D1,D0]]] = -4[D1,D0]",
	    br(d1, br(d1, br(d1, d0))) + Gaussian(4) * br(d1, d0));
	add("[A0,A0] = 0", br(a0, a0));
	rep.pass = true;
	for (auto const &l : rep.lines)
		rep.pass = rep.pass && l.pass;
	return rep;
}

LieElement specialize_root(Root const &g)
{
	Gaussian half_i(0, mpq_class(1, 2));
	Gaussian sign = g.n % 2 == 0 ? Gaussian(1) : Gaussian(-1);
	switch (g.kind)
	{
	case RootKind::real0:
		return (sign * half_i) * LieElement::A(-g.n - 1);
	case RootKind::real1:
		return (-sign * half_i) * LieElement::A(g.n);
	default:
		return -sign * LieElement::G(g.n);
	}
}

LieElement specialize(PBWElement const &x)
{
	LieElement r;
	for (auto const &[m, s] : x.terms())
	{
		mpq_class v = evaluate(s, 1, 1);
		if (m.roots().size() != 1)
		{
			if (v != 0)
				throw std::domain_error("coefficient of " + (m.is_unit() ? "1" : m.str()) +
				                        " does not vanish at q = 1, c = 1");
			continue;
		}
		r += Gaussian(v) * specialize_root(m.roots()[0]);
	}
	return r;
}

SpecializationReport specialization_check(Root const &g, Root const &h)
{
	SpecializationReport rep;
	PBWElement bg(g), bh(h);
	PBWElement comm = pbw_multiply(bg, bh) - pbw_multiply(bh, bg);
	rep.classical = bracket(specialize_root(g), specialize_root(h));
	try
	{
		rep.quantum = specialize(comm);
	}
	catch (PoleError const &e)
	{
		rep.failure = std::string("pole at q = 1, c = 1: ") + e.what();
		return rep;
	}
	catch (std::domain_error const &e)
	{
		rep.failure = e.what();
		return rep;
	}
	rep.pass = rep.quantum == rep.classical;
	if (!rep.pass)
		rep.failure = "specialized commutator " + rep.quantum.str() + " differs from bracket " +
		              rep.classical.str();
	return rep;
}

} // namespace qons
