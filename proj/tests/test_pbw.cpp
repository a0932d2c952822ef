#include "qonsager/errors.hpp"
#include "qonsager/pbw.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qons;

namespace {

Scalar const q = Scalar::q();
Scalar const c = Scalar::c();

RewriteSystem const &sys()
{
	return SystemStore::get(CMode::generic, 12);
}

PBWElement B(Root r)
{
	return PBWElement(r);
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

// the product computed in the free algebra and compared modulo the ideal
bool agrees_with_free(PBWElement const &x, PBWElement const &y)
{
	NcPoly lhs = expand_to_free(pbw_multiply(x, y));
	NcPoly rhs = expand_to_free(x) * expand_to_free(y);
	return sys().is_zero_mod_ideal(lhs - rhs);
}

PBWElement random_pbw(std::mt19937 &rng, int max_height, int terms)
{
	PBWElement x;
	std::uniform_int_distribution<int> h(0, max_height);
	for (int i = 0; i < terms; ++i)
	{
		auto ms = pbw_monomials(h(rng));
		std::uniform_int_distribution<size_t> pick(0, ms.size() - 1);
		x += PBWElement(ms[pick(rng)], qons::testing::random_coef(rng));
	}
	return x;
}

} // namespace

TEST(RootOrder, Examples)
{
	EXPECT_TRUE(root_compare(Root::real0(0), Root::imaginary(1)) < 0);
	EXPECT_TRUE(root_compare(Root::imaginary(3), Root::imaginary(2)) < 0);
	EXPECT_TRUE(root_compare(Root::real1(4), Root::real1(1)) < 0);
	EXPECT_TRUE(root_compare(Root::real0(0), Root::real0(1)) < 0);
	EXPECT_TRUE(root_compare(Root::imaginary(1), Root::real1(7)) < 0);
	EXPECT_TRUE(root_compare(Root::real1(2), Root::real1(2)) == 0);
}

TEST(Coefficients, AAndB)
{
	EXPECT_EQ(coeff_a(1, 3), 1 + q.pow(-2));
	EXPECT_EQ(coeff_a(2, 4), q.pow(-2));
	EXPECT_EQ(coeff_a(1, 2), Scalar(1));
	EXPECT_EQ(coeff_b(1, 1), c * qint(2));
	EXPECT_EQ(coeff_b(1, 3), -(q.pow(4) - 1) * q.pow(-2));
	EXPECT_THROW(coeff_a(3, 5), std::invalid_argument);
	EXPECT_THROW(coeff_b(0, 2), std::invalid_argument);
}

TEST(Monomials, CountsMatchGeneratingFunction)
{
	auto series = qons::testing::pbw_series(10);
	for (int h = 0; h <= 10; ++h)
		EXPECT_EQ(long(pbw_monomials(h).size()), series[h]) << h;
	EXPECT_EQ(pbw_monomials(0).size(), 1u);
	EXPECT_TRUE(pbw_monomials(0)[0].is_unit());
}

TEST(Straighten, Examples)
{
	Root b0 = Root::real0(0), b1 = Root::real1(0), bd = Root::imaginary(1);
	EXPECT_EQ(straighten(b1, Root::real1(1)),
	          q.pow(-2) * PBWElement(PBWMonomial::from_roots({Root::real1(1), b1})) - B(bd));
	PBWElement expect = q * q * PBWElement(PBWMonomial::from_roots({b0, b1})) + q * q * B(bd);
	EXPECT_EQ(straighten(b1, b0), expect);
	EXPECT_EQ(expect.str(), "q^2*B0*B1 + q^2*B(1,d)");
	EXPECT_EQ(straighten(bd, Root::imaginary(2)),
	          PBWElement(PBWMonomial::from_roots({Root::imaginary(2), bd})));
	EXPECT_THROW(straighten(b0, b1), std::invalid_argument);
	EXPECT_EQ(straighten(b0, b0), PBWElement(PBWMonomial::from_roots({b0, b0})));
}

TEST(Straighten, OutputIsOrderedAndHeightBounded)
{
	auto roots = roots_up_to(9);
	for (Root g : roots)
		for (Root h : roots)
		{
			if (root_compare(h, g) > 0)
				continue;
			PBWElement s = straighten(g, h);
			for (auto const &[m, k] : s.terms())
			{
				EXPECT_NO_THROW(PBWMonomial::from_roots(m.roots()));
				EXPECT_LE(m.height(), g.height() + h.height());
			}
		}
}

TEST(Multiply, EqBdelB0)
{
	PBWElement bd = B(Root::imaginary(1)), b0 = B(Root::real0(0)), b1 = B(Root::real1(0));
	PBWElement expect = PBWElement(PBWMonomial::from_roots({Root::real0(0), Root::imaginary(1)})) +
	                    c * qint(2) * B(Root::real0(1)) - c * qint(2) * b1;
	EXPECT_EQ(pbw_multiply(bd, b0), expect);
	EXPECT_EQ(pbw_multiply(bd, PBWElement(Scalar(1))), bd);
	EXPECT_EQ(pbw_multiply(b1, pbw_multiply(b1, b0)), pbw_multiply(pbw_multiply(b1, b1), b0));
}

TEST(Expand, Examples)
{
	NcPoly g0 = NcPoly::generator(0), g1 = NcPoly::generator(1);
	EXPECT_EQ(expand_to_free(B(Root::imaginary(1))), -(g0 * g1) + q.pow(-2) * (g1 * g0));
	EXPECT_EQ(expand_to_free(PBWElement(Scalar(1))), NcPoly(Scalar(1)));
	EXPECT_EQ(expand_to_free(PBWElement(PBWMonomial::from_roots({Root::real0(0), Root::real0(0)}))),
	          g0 * g0);
}

TEST(Oracle, SingleRootPairs)
{
	auto roots = roots_up_to(9);
	for (Root g : roots)
		for (Root h : roots)
		{
			if (g.height() + h.height() > 10)
				continue;
			EXPECT_TRUE(agrees_with_free(B(g), B(h))) << g.str() << " * " << h.str();
		}
}

TEST(Oracle, RandomProducts)
{
	std::mt19937 rng(21);
	for (int i = 0; i < 60; ++i)
	{
		PBWElement x = random_pbw(rng, 5, 2), y = random_pbw(rng, 5, 2);
		EXPECT_TRUE(agrees_with_free(x, y)) << x.str() << " | " << y.str();
	}
}

TEST(Oracle, Associativity)
{
	std::mt19937 rng(22);
	for (int i = 0; i < 20; ++i)
	{
		PBWElement x = random_pbw(rng, 4, 2), y = random_pbw(rng, 4, 2), z = random_pbw(rng, 4, 2);
		EXPECT_EQ(pbw_multiply(pbw_multiply(x, y), z), pbw_multiply(x, pbw_multiply(y, z)));
	}
}

TEST(Lift, RoundTrip)
{
	std::mt19937 rng(23);
	for (int i = 0; i < 20; ++i)
	{
		NcPoly x = qons::testing::random_ncpoly(rng, 6, 4);
		EXPECT_TRUE(sys().is_zero_mod_ideal(expand_to_free(lift_to_pbw(x)) - x));
	}
	NcPoly g0 = NcPoly::generator(0), g1 = NcPoly::generator(1);
	EXPECT_EQ(lift_to_pbw(g1 * g0).str(), "q^2*B0*B1 + q^2*B(1,d)");
	EXPECT_EQ(lift_to_pbw(named_morphism("T0").apply(g1)), B(Root::real0(1)));
}

TEST(Corrections, VanishAtOne)
{
	EXPECT_TRUE(correction_real(0, 1).is_zero());
	EXPECT_TRUE(correction_imag(0, 1, 0).is_zero());
	EXPECT_TRUE(correction_imag(0, 1, 1).is_zero());
	EXPECT_EQ(correction_real(0, 2),
	          (q.pow(-2) - 1) * PBWElement(PBWMonomial::from_roots({Root::real1(1), Root::real1(1)})));
	for (int r = 0; r <= 3; ++r)
		for (int m = 1; m <= 5; ++m)
			EXPECT_TRUE(coefficients_in_q_minus_1(correction_real(r, m))) << r << "," << m;
	for (int i = 0; i <= 1; ++i)
		for (int m = 1; m <= 4; ++m)
			for (int p = 0; p <= 4; ++p)
				EXPECT_TRUE(coefficients_in_q_minus_1(correction_imag(p, m, i)))
				    << p << "," << m << "," << i;
	EXPECT_FALSE(coefficients_in_q_minus_1(PBWElement(c * qint(2))));
	auto split = c_linear_split(c * qint(2) + q);
	ASSERT_TRUE(split.has_value());
	EXPECT_EQ(split->first, q);
	EXPECT_EQ(split->second, qint(2));
	EXPECT_FALSE(c_linear_split(c * c).has_value());
}

TEST(Damiani, TopComponents)
{
	NcPoly g0 = NcPoly::generator(0), g1 = NcPoly::generator(1);
	EXPECT_EQ(damiani_root_vector(Root::imaginary(1)), -(g0 * g1) + q.pow(-2) * (g1 * g0));
	EXPECT_EQ(damiani_root_vector(Root::real0(1)),
	          qint(2).inverse() * p_commutator(damiani_root_vector(Root::imaginary(1)), g0));
	auto serre = SystemStore::get(CMode::zero, 9);
	for (int h = 1; h <= 9; ++h)
		for (Root g : roots_up_to(h))
			if (g.height() == h)
			{
				auto rep = check_top_component(g, serre);
				EXPECT_TRUE(rep.pass) << g.str() << ": " << rep.failure;
			}
	EXPECT_THROW(check_top_component(Root::real0(0), sys()), std::invalid_argument);
}

TEST(Independence, SmallHeights)
{
	auto r0 = independence_check(0, sys());
	EXPECT_EQ(r0.monomials, 1);
	EXPECT_TRUE(r0.pass);
	auto r2 = independence_check(2, sys());
	EXPECT_EQ(r2.monomials, 7);
	EXPECT_EQ(r2.rank, 7);
	auto r4 = independence_check(4, sys());
	EXPECT_EQ(r4.monomials, 29);
	EXPECT_EQ(r4.rank, 29);
	EXPECT_TRUE(r4.pass);
	EXPECT_THROW(independence_check(13, sys()), BoundExceeded);
}
