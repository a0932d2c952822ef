#include "qonsager/errors.hpp"
#include "qonsager/expr.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qons;

namespace {

Scalar q()
{
	return Scalar::q();
}

Scalar c()
{
	return Scalar::c();
}

Expr leaf(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> pick(0, 6), small(0, 3);
	Expr e;
	switch (pick(rng))
	{
	case 0:
		e.kind = ExprKind::integer;
		e.value = small(rng) + 1;
		break;
	case 1:
		e.kind = ExprKind::q;
		break;
	case 2:
		e.kind = ExprKind::c;
		break;
	case 3:
		e.kind = ExprKind::qint;
		e.index = small(rng) + 1;
		break;
	default:
		e.kind = ExprKind::root;
		e.index = small(rng) - 1;
		e.family = Family(small(rng) % 3);
		if (e.family == Family::d)
			e.index = small(rng) + 1;
	}
	return e;
}

Expr random_expr(std::mt19937 &rng, int depth)
{
	if (depth == 0)
		return leaf(rng);
	std::uniform_int_distribution<int> pick(0, 10), small(-2, 3);
	Expr e;
	switch (pick(rng))
	{
	case 0:
		e.kind = ExprKind::add;
		break;
	case 1:
		e.kind = ExprKind::sub;
		break;
	case 2:
		e.kind = ExprKind::mul;
		break;
	case 3:
		e.kind = ExprKind::div;
		break;
	case 4:
		e.kind = ExprKind::neg;
		break;
	case 5:
		e.kind = ExprKind::pow;
		e.index = small(rng);
		break;
	case 6:
		e.kind = ExprKind::commutator;
		break;
	case 7:
		e.kind = ExprKind::morphism;
		e.name = std::vector<std::string>{"Phi", "T0", "T0inv", "T1", "T1inv"}[rng() % 5];
		break;
	default:
		return leaf(rng);
	}
	int arity = e.kind == ExprKind::neg || e.kind == ExprKind::pow || e.kind == ExprKind::morphism ? 1
	            : e.kind == ExprKind::commutator && rng() % 2                                     ? 3
	                                                                                              : 2;
	for (int k = 0; k < std::min(arity, 2); ++k)
		e.args.push_back(random_expr(rng, depth - 1));
	if (arity == 3)
	{
		Expr p;
		p.kind = ExprKind::pow;
		p.index = small(rng);
		p.args.push_back(Expr{ExprKind::q});
		e.args.push_back(p);
	}
	return e;
}

} // namespace

TEST(Parse, Examples)
{
	Expr e = parse_expr("[B(1,d), B0]");
	ASSERT_EQ(e.kind, ExprKind::commutator);
	ASSERT_EQ(e.args.size(), 2u);
	EXPECT_EQ(e.args[0].kind, ExprKind::root);
	EXPECT_EQ(e.args[0].family, Family::d);
	EXPECT_EQ(e.args[0].index, 1);
	EXPECT_EQ(e.args[1].family, Family::a0);
	EXPECT_EQ(e.args[1].index, 0);

	Expr p = parse_expr("[B(0,a1), B(1,a1); q^-2]");
	ASSERT_EQ(p.args.size(), 3u);
	EXPECT_EQ(p.args[2].kind, ExprKind::pow);
	EXPECT_EQ(p.args[2].index, -2);
	EXPECT_EQ(*scalar_value(p.args[2]), Scalar::q_pow(-2));

	Expr t = parse_expr("T0(B1) * B0^2");
	ASSERT_EQ(t.kind, ExprKind::mul);
	EXPECT_EQ(t.args[0].kind, ExprKind::morphism);
	EXPECT_EQ(t.args[0].name, "T0");
	EXPECT_EQ(t.args[1].kind, ExprKind::pow);
	EXPECT_EQ(t.args[1].index, 2);
}

TEST(Parse, PrecedenceAndWhitespace)
{
	EXPECT_EQ(parse_expr("B0 + B1*B0^2"), parse_expr("B0+(B1*(B0^2))"));
	EXPECT_EQ(parse_expr("  B0 - B1 - B0 "), parse_expr("(B0 - B1) - B0"));
	EXPECT_EQ(parse_expr("-B0^2"), parse_expr("-(B0^2)"));
	EXPECT_EQ(parse_expr("1/q^2*B1"), parse_expr("(1/(q^2))*B1"));
	EXPECT_EQ(render(parse_expr("(B0 + B1)*(B0 - B1)")), "(B0 + B1)*(B0 - B1)");
	EXPECT_EQ(render(parse_expr("[ 3 ] q*B(  -1 , a0 )")), "[3]q*B(-1,a0)");
	Expr qi = parse_expr("[2]q");
	EXPECT_EQ(qi.kind, ExprKind::qint);
	EXPECT_EQ(*scalar_value(qi), q() + q().inverse());
	EXPECT_EQ(parse_expr("[2, B0]").kind, ExprKind::commutator);
}

TEST(Parse, ErrorsCarryOffsetAndExpectedTokens)
{
	auto fails = [](std::string const &s, size_t offset, std::string const &token) {
		try
		{
			parse_expr(s);
		}
		catch (ParseError const &e)
		{
			EXPECT_EQ(e.offset, offset) << s << ": " << e.what();
			EXPECT_NE(std::find(e.expected.begin(), e.expected.end(), token), e.expected.end())
			    << s << ": " << e.what();
			return;
		}
		ADD_FAILURE() << s << " parsed";
	};
	fails("B0 + * B1", 5, "'B0'");
	fails("B(1,e)", 4, "'d'");
	fails("Foo(B0)", 0, "'T0inv'");
	fails("[B0, B1; B0]", 9, "scalar");
	fails("[B0, B1", 7, "']'");
	fails("[B0 B1]", 4, "','");
	fails("B0 B1", 3, "end of input");
	fails("", 0, "integer");
	fails("[2]B0", 3, "'q'");
	fails("T0 B0", 3, "'('");
	fails("B0^", 3, "integer");
	fails("B(99999999999,a0)", 2, "integer");
}

TEST(Render, RoundTripRandomTrees)
{
	std::mt19937 rng(7);
	for (int i = 0; i < 500; ++i)
	{
		Expr e = random_expr(rng, 4);
		std::string s = render(e);
		EXPECT_EQ(parse_expr(s), e) << s;
	}
}

TEST(Eval, FreeExamples)
{
	NcPoly g0 = NcPoly::generator(0), g1 = NcPoly::generator(1);
	EXPECT_EQ(eval_free(parse_expr("B(1,d)")), -(g0 * g1) + Scalar::q_pow(-2) * (g1 * g0));
	EXPECT_EQ(eval_free(parse_expr("B0^0")), NcPoly(Scalar(1)));
	EXPECT_EQ(eval_free(parse_expr("B(-1,a1)")), g0);
	EXPECT_EQ(eval_free(parse_expr("B(-2,a0)")), root_vector(Root::real1(1)));
	EXPECT_EQ(eval_free(parse_expr("[B0, B1; q^-2]")), p_commutator(g0, g1, Scalar::q_pow(-2)));
	EXPECT_EQ(eval_free(parse_expr("T0(B1)")), named_morphism("T0").apply(g1));
	EXPECT_EQ(eval_free(parse_expr("B0/(q+c)")), (q() + c()).inverse() * g0);
	EXPECT_THROW(eval_free(parse_expr("B(0,d)")), std::invalid_argument);
	EXPECT_THROW(eval_free(parse_expr("B0/B1")), std::invalid_argument);
	EXPECT_THROW(eval_free(parse_expr("B0^-1")), std::invalid_argument);
	EXPECT_THROW(eval_free(parse_expr("B0/(q-q)")), DivisionByZero);
}

TEST(Eval, PbwExamples)
{
	Scalar c2q = c() * qint(2);
	EXPECT_EQ(eval_pbw(parse_expr("[B(1,d), B0]")),
	          c2q * PBWElement(Root::real0(1)) - c2q * PBWElement(Root::real1(0)));
	EXPECT_EQ(eval_pbw(parse_expr("B1*B0")).str(), "q^2*B0*B1 + q^2*B(1,d)");
	// the image of B1 under T0 is the root vector B(1,a0)
	EXPECT_EQ(eval_pbw(parse_expr("T0(B1)")), PBWElement(Root::real0(1)));
	EXPECT_EQ(eval_pbw(parse_expr("T1inv(B0)")), PBWElement(Root::real1(1)));
	EXPECT_EQ(eval_pbw(parse_expr("T0(T1(B0))")), PBWElement(Root::real0(2)));
}

// the pbw target agrees with the free one modulo the relations
TEST(Eval, TargetsAgree)
{
	RewriteSystem const &sys = SystemStore::get(CMode::generic, 8);
	for (std::string s : {"B1*B0", "[B(1,d), B0]", "B1^2*B0 - q*B(1,a1)*B0", "T1(B0)*B1",
	                      "[B(1,d), [B1, B(1,d)]]", "T0inv(B0)*B0 + [3]q*B(2,d)"})
	{
		Expr e = parse_expr(s);
		NcPoly d = expand_to_free(eval_pbw(e)) - eval_free(e);
		EXPECT_TRUE(sys.is_zero_mod_ideal(d)) << s;
	}
}

TEST(Render, ResultsReparse)
{
	std::vector<std::string> inputs = {"B(1,d)", "B(2,a0)", "B(1,a1)*B(1,d)", "T0(B1)*B0^2",
	                                   "[B(0,a1), B(1,a1); q^-2]", "B1^3*B0 - c/(q-c)*B0"};
	for (auto const &s : inputs)
	{
		NcPoly x = eval_free(parse_expr(s));
		EXPECT_EQ(eval_free(parse_expr(x.str())), x) << s;
		PBWElement y = eval_pbw(parse_expr(s));
		EXPECT_EQ(eval_pbw(parse_expr(y.str())), y) << s;
	}
	for (Root r : {Root::real0(2), Root::imaginary(3), Root::real1(3)})
	{
		NcPoly x = root_vector(r);
		EXPECT_EQ(eval_free(parse_expr(x.str())), x) << r.str();
	}
}
