#include "qonsager/cli.hpp"
#include "qonsager/expr.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qons;
using nlohmann::json;

namespace {

struct Run
{
	int code;
	std::string out, err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = run_command(args, out, err);
	return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir()
{
	auto p = std::filesystem::temp_directory_path() /
	         ("qonsager-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
	          ::testing::UnitTest::GetInstance()->current_test_info()->name());
	std::filesystem::remove_all(p);
	std::filesystem::create_directories(p);
	return p;
}

} // namespace

TEST(Cli, NormalizePbw)
{
	auto r = run({"normalize", "--mode", "pbw", "--expr", "B1*B0"});
	EXPECT_EQ(r.code, exit_ok);
	EXPECT_EQ(r.out, "q^2*B0*B1 + q^2*B(1,d)\n");
	r = run({"normalize", "--mode", "pbw", "--expr", "[B(1,d), B0]"});
	EXPECT_EQ(r.out, "(q^2*c + c)/q*B(1,a0) - (q^2*c + c)/q*B1\n");
}

TEST(Cli, NormalizeFreeIsCanonical)
{
	// the PBW form of an expression and the expression itself share a free normal form
	std::string e = "B(1,a1)*B(1,d)*B0";
	auto pbw = run({"normalize", "--mode", "pbw", "--expr", e});
	pbw.out.pop_back();
	auto a = run({"normalize", "--mode", "free", "--bound", "6", "--expr", e});
	auto b = run({"normalize", "--mode", "free", "--bound", "6", "--expr", pbw.out});
	EXPECT_NE(eval_free(parse_expr(e)), eval_free(parse_expr(pbw.out)));
	EXPECT_EQ(a.code, exit_ok);
	EXPECT_EQ(a.out, b.out);
	auto j = run({"normalize", "--mode", "free", "--bound", "6", "--json", "--expr", "B1*B0"});
	auto parsed = json::parse(j.out);
	EXPECT_EQ(parsed["schema_version"], report_schema_version);
	EXPECT_EQ(parsed["bound"], 6);
}

TEST(Cli, Expand)
{
	auto r = run({"expand", "--expr", "B(1,d)"});
	EXPECT_EQ(r.out, "-B0*B1 + 1/q^2*B1*B0\n");
	EXPECT_EQ(run({"expand", "--expr", "B0^0"}).out, "1\n");
	auto j = json::parse(run({"expand", "--json", "--expr", "B(1,d)"}).out);
	EXPECT_EQ(j["expr"], "B(1,d)");
	EXPECT_EQ(j["terms"].size(), 2u);
	// rendered output parses back to the same element
	std::string text = j["text"];
	EXPECT_EQ(eval_free(parse_expr(text)), eval_free(parse_expr("B(1,d)")));
}

TEST(Cli, Dims)
{
	auto r = run({"dims", "--max", "5"});
	EXPECT_EQ(r.code, exit_ok);
	std::istringstream in(r.out);
	std::string header;
	std::getline(in, header);
	std::vector<long> normal;
	int d;
	long nw, pm, s;
	while (in >> d >> nw >> pm >> s)
		normal.push_back(nw);
	EXPECT_EQ(normal, (std::vector<long>{1, 2, 4, 8, 14, 24}));
}

TEST(Cli, ExitCodes)
{
	EXPECT_EQ(run({}).code, exit_usage);
	EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
	EXPECT_EQ(run({"normalize", "--mode", "odd", "--expr", "B0"}).code, exit_usage);
	EXPECT_EQ(run({"verify", "--suite", "nope"}).code, exit_usage);
	EXPECT_EQ(run({"verify", "--suite", "imaginary-commute", "--bound", "6"}).code, exit_usage);
	EXPECT_EQ(run({"expand", "--expr", "B0 +"}).code, exit_usage);
	EXPECT_EQ(run({"expand", "--expr", "B(0,d)"}).code, exit_usage);
	EXPECT_EQ(run({"normalize", "--mode", "free", "--bound", "4", "--expr", "B0^5"}).code,
	          exit_capacity);
	EXPECT_EQ(run({"--help"}).code, exit_ok);
	auto e = run({"expand", "--expr", "[B0, B1"});
	EXPECT_NE(e.err.find("byte 7"), std::string::npos) << e.err;
}

// a true identity passes; the same identity with one coefficient changed fails with code 2
TEST(Cli, MutatedIdentityFails)
{
	std::string lhs = "[B(1,d), B0]";
	auto ok = run({"check", "--bound", "4", "--lhs", lhs, "--rhs", "[2]q*c*(B(1,a0) - B1)"});
	EXPECT_EQ(ok.code, exit_ok) << ok.out;
	auto bad = run({"check", "--bound", "4", "--lhs", lhs, "--rhs", "[2]q*c*(B(1,a0) - 2*B1)"});
	EXPECT_EQ(bad.code, exit_failure);
	EXPECT_NE(bad.out.find("lhs - rhs"), std::string::npos);
	auto pbw = run({"check", "--mode", "pbw", "--lhs", "B1*B0", "--rhs", "q^2*B0*B1 + q*B(1,d)"});
	EXPECT_EQ(pbw.code, exit_failure);
	auto j = json::parse(run({"check", "--json", "--bound", "4", "--lhs", lhs, "--rhs", "B1"}).out);
	EXPECT_EQ(j["status"], "fail");
	EXPECT_TRUE(j.contains("witness"));
}

TEST(Cli, VerifyJsonSchema)
{
	auto r = run({"verify", "--suite", "bdelta-real,imaginary-commute", "--bound", "10", "--json"});
	EXPECT_EQ(r.code, exit_ok);
	auto j = json::parse(r.out);
	EXPECT_EQ(j["schema_version"], report_schema_version);
	EXPECT_EQ(j["items"].size(), 10u);
	for (auto const &it : j["items"])
	{
		for (char const *k : {"identity", "params", "degree", "status", "millis"})
			EXPECT_TRUE(it.contains(k)) << k;
		EXPECT_EQ(it["status"], "pass");
		EXPECT_FALSE(it.contains("witness"));
	}
	EXPECT_EQ(j["summary"]["passed"], 10);
}

TEST(Cli, VerifyMatchesGolden)
{
	std::ifstream f(std::string(QONSAGER_SOURCE_DIR) + "/tests/golden/verify_all_bound10.json");
	ASSERT_TRUE(f);
	json golden = json::parse(f);
	for (std::string jobs : {"1", "4"})
	{
		auto r = run({"verify", "--suite", "all", "--bound", "10", "--allow-skips", "--json",
		              "--no-timing", "--jobs", jobs});
		EXPECT_EQ(r.code, exit_ok);
		EXPECT_EQ(json::parse(r.out), golden) << "jobs " << jobs;
	}
}

TEST(Cli, CompleteAndCache)
{
	auto dir = scratch_dir();
	std::string file = (dir / "sys.json").string();
	auto r = run({"complete", "--bound", "6", "--cache", file});
	EXPECT_EQ(r.code, exit_ok) << r.err;
	EXPECT_NE(r.out.find("written"), std::string::npos);
	std::ifstream in(file);
	RewriteSystem loaded = RewriteSystem::load(in);
	EXPECT_EQ(loaded, SystemStore::get(CMode::generic, 6));
	r = run({"complete", "--bound", "5", "--cache", file});
	EXPECT_NE(r.out.find("read from"), std::string::npos);
	EXPECT_EQ(run({"complete", "--bound", "6", "--cache", file, "--mode", "zero"}).code, exit_usage);
	{
		std::ofstream bad(file);
		bad << "{\"not\": \"a system\"}";
	}
	r = run({"complete", "--bound", "6", "--cache", file});
	EXPECT_EQ(r.code, exit_usage);
	EXPECT_NE(r.err.find("cache mismatch"), std::string::npos);
	std::filesystem::remove_all(dir);
}

// every exported product agrees with the free-algebra product modulo the relations
TEST(Cli, ExportStructureConstants)
{
	auto j = structure_constants(6);
	RewriteSystem const &sys = SystemStore::get(CMode::generic, 6);
	ASSERT_FALSE(j["entries"].empty());
	bool saw_b1b0 = false;
	for (auto const &e : j["entries"])
	{
		std::string left = e["left"], right = e["right"];
		PBWElement x = eval_pbw(parse_expr(left + "*" + right));
		NcPoly prod = eval_free(parse_expr(left)) * eval_free(parse_expr(right));
		EXPECT_TRUE(sys.is_zero_mod_ideal(expand_to_free(x) - prod)) << left << "*" << right;
		EXPECT_EQ(e["terms"].size(), x.size());
		saw_b1b0 = saw_b1b0 || (left == "B1" && right == "B0");
	}
	EXPECT_TRUE(saw_b1b0);
	auto dir = scratch_dir();
	std::string file = (dir / "sc.json").string();
	EXPECT_EQ(run({"export", "--max-height", "6", "--output", file}).code, exit_ok);
	std::ifstream in(file);
	EXPECT_EQ(json::parse(in), json::parse(j.dump()));
	std::filesystem::remove_all(dir);
}
