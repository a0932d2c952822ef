#include "qonsager/classical.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>

using namespace qons;

namespace {

using L = LieElement;

// loop sl2 with central term: keys (power of t, 0 = e, 1 = f, 2 = h)
struct Loop
{
	std::map<std::pair<int, int>, Gaussian> terms;
	Gaussian k;

	void add(int p, int x, Gaussian const &s)
	{
		Gaussian v = terms[{p, x}] + s;
		if (v.is_zero())
			terms.erase({p, x});
		else
			terms[{p, x}] = v;
	}
	bool operator==(Loop const &b) const = default;
};

// [x, y] in sl2 as (basis, coefficient), and the form (x, y)
std::pair<int, long> sl2_bracket(int x, int y)
{
	static long const table[3][3][2] = {
	    {{0, 0}, {2, 1}, {0, -2}},
	    {{2, -1}, {1, 0}, {1, 2}},
	    {{0, 2}, {1, -2}, {2, 0}},
	};
	return {int(table[x][y][0]), table[x][y][1]};
}

long sl2_form(int x, int y)
{
	if ((x == 0 && y == 1) || (x == 1 && y == 0))
		return 1;
	return x == 2 && y == 2 ? 2 : 0;
}

Loop loop_bracket(Loop const &a, Loop const &b)
{
	Loop r;
	for (auto const &[ka, sa] : a.terms)
		for (auto const &[kb, sb] : b.terms)
		{
			auto [z, k] = sl2_bracket(ka.second, kb.second);
			Gaussian s = sa * sb;
			if (k != 0)
				r.add(ka.first + kb.first, z, Gaussian(k) * s);
			if (ka.first + kb.first == 0)
				r.k = r.k + Gaussian(ka.first * sl2_form(ka.second, kb.second)) * s;
		}
	return r;
}

Loop to_loop(L const &x)
{
	Loop r;
	Gaussian two_i(0, 2);
	for (auto const &[b, s] : x.terms())
	{
		if (b.imaginary)
		{
			r.add(b.n, 2, s);
			r.add(-b.n, 2, -s);
		}
		else
		{
			r.add(b.n, 0, two_i * s);
			r.add(-b.n, 1, -(two_i * s));
		}
	}
	return r;
}

std::vector<L> basis_elements(int n)
{
	std::vector<L> out;
	for (int k = -n; k <= n; ++k)
		out.push_back(L::A(k));
	for (int m = 1; m <= n; ++m)
		out.push_back(L::G(m));
	return out;
}

L random_lie(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> k(-3, 3), pick(0, 1), coef(-4, 4);
	L x;
	for (int i = 0; i < 3; ++i)
	{
		Gaussian s(coef(rng), coef(rng));
		x += s * (pick(rng) ? L::A(k(rng)) : L::G(k(rng)));
	}
	return x;
}

// 2x2 matrices over Q(i): the evaluation representation of loop sl2 at t = t0
using Mat = std::array<Gaussian, 4>;

Mat mat_mul(Mat const &a, Mat const &b)
{
	return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
	        a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat mat_add(Mat const &a, Mat const &b, Gaussian const &s)
{
	Mat r;
	for (int i = 0; i < 4; ++i)
		r[i] = a[i] + s * b[i];
	return r;
}

Gaussian power(mpq_class t, int p)
{
	mpq_class r = 1;
	for (int i = 0; i < std::abs(p); ++i)
		r *= t;
	return p < 0 ? Gaussian(1 / r) : Gaussian(r);
}

Mat evaluate_loop(Loop const &x, mpq_class const &t)
{
	Mat r{};
	for (auto const &[k, s] : x.terms)
	{
		Gaussian v = s * power(t, k.first);
		if (k.second == 0)
			r[1] = r[1] + v;
		else if (k.second == 1)
			r[2] = r[2] + v;
		else
		{
			r[0] = r[0] + v;
			r[3] = r[3] - v;
		}
	}
	return r;
}

// free polynomial at q = 1, c = 1 with g0, g1 sent to matrices
Mat evaluate_free(NcPoly const &x, Mat const &g0, Mat const &g1)
{
	Mat r{};
	for (auto const &[w, s] : x.terms())
	{
		Mat m{Gaussian(1), Gaussian(0), Gaussian(0), Gaussian(1)};
		for (int i = 0; i < w.len; ++i)
			m = mat_mul(m, w.at(i) == 0 ? g0 : g1);
		r = mat_add(r, m, Gaussian(evaluate(s, 1, 1)));
	}
	return r;
}

std::vector<Root> roots_up_to(int height)
{
	std::vector<Root> out;
	for (int n = 0; 2 * n + 1 <= height; ++n)
	{
		out.push_back(Root::real0(n));
		out.push_back(Root::real1(n));
	}
	for (int m = 1; 2 * m <= height; ++m)
		out.push_back(Root::imaginary(m));
	return out;
}

} // namespace

TEST(Lie, BracketTable)
{
	EXPECT_EQ(bracket(L::A(2), L::A(0)), Gaussian(4) * L::G(2));
	EXPECT_EQ(bracket(L::A(0), L::A(2)), Gaussian(-4) * L::G(2));
	EXPECT_EQ(bracket(L::G(1), L::A(0)), Gaussian(2) * L::A(1) - Gaussian(2) * L::A(-1));
	EXPECT_TRUE(bracket(L::G(1), L::G(3)).is_zero());
	EXPECT_TRUE(L::G(0).is_zero());
	EXPECT_EQ(L::G(-2), Gaussian(-1) * L::G(2));
	EXPECT_EQ(L::G(2).str(), "1*G(2)");
}

TEST(Lie, AntisymmetryAndJacobi)
{
	std::mt19937 rng(31);
	for (int i = 0; i < 50; ++i)
	{
		L x = random_lie(rng), y = random_lie(rng), z = random_lie(rng);
		EXPECT_EQ(bracket(x, y), Gaussian(-1) * bracket(y, x));
		L jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
		EXPECT_TRUE(jac.is_zero()) << jac.str();
	}
}

TEST(Lie, LoopRealization)
{
	auto basis = basis_elements(3);
	for (L const &x : basis)
		for (L const &y : basis)
		{
			Loop lhs = loop_bracket(to_loop(x), to_loop(y));
			EXPECT_TRUE(lhs.k.is_zero()) << x.str() << ", " << y.str();
			EXPECT_EQ(lhs, to_loop(bracket(x, y))) << x.str() << ", " << y.str();
		}
}

TEST(Lie, DolanGrady)
{
	auto rep = check_dolan_grady();
	EXPECT_TRUE(rep.pass);
	EXPECT_GE(rep.lines.size(), 4u);
	for (auto const &l : rep.lines)
		EXPECT_TRUE(l.pass) << l.name;
}

TEST(Specialize, Generators)
{
	Gaussian half_i(0, mpq_class(1, 2));
	EXPECT_EQ(specialize_root(Root::real0(0)), half_i * L::A(-1));
	EXPECT_EQ(specialize_root(Root::real1(0)), -half_i * L::A(0));
	EXPECT_EQ(specialize_root(Root::imaginary(1)), L::G(1));
	EXPECT_EQ(specialize_root(Root::imaginary(2)), Gaussian(-1) * L::G(2));
	EXPECT_THROW(specialize(PBWElement(PBWMonomial::from_roots({Root::real0(0), Root::real0(0)}))),
	             std::domain_error);
	EXPECT_THROW(specialize(PBWElement(Scalar(1))), std::domain_error);
}

// the root vectors evaluated in a 2x2 representation agree with their images
TEST(Specialize, EvaluationRepresentation)
{
	for (mpq_class t : {mpq_class(2), mpq_class(-3, 5)})
	{
		Mat g0 = evaluate_loop(to_loop(specialize_root(Root::real0(0))), t);
		Mat g1 = evaluate_loop(to_loop(specialize_root(Root::real1(0))), t);
		for (Root g : roots_up_to(9))
			EXPECT_EQ(evaluate_free(expand_to_free(PBWElement(g)), g0, g1),
			          evaluate_loop(to_loop(specialize_root(g)), t))
			    << g.str();
	}
}

TEST(Specialize, CommutatorsMatchBracket)
{
	auto roots = roots_up_to(9);
	for (Root g : roots)
		for (Root h : roots)
		{
			if (g.height() + h.height() > 10)
				continue;
			auto rep = specialization_check(g, h);
			EXPECT_TRUE(rep.pass) << g.str() << ", " << h.str() << ": " << rep.failure;
		}
}
