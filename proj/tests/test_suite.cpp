#include "qonsager/errors.hpp"
#include "qonsager/suite.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>
#include <thread>

using namespace qons;

namespace {

unsigned jobs()
{
	return std::max(1u, std::thread::hardware_concurrency());
}

std::string describe(ItemResult const &r)
{
	std::string s = r.suite + " | " + r.identity;
	for (auto const &[k, v] : r.params)
		s += " " + k + "=" + std::to_string(v);
	return s + " | " + to_string(r.status) + " " + r.witness;
}

} // namespace

TEST(Suite, NamesAreKnown)
{
	EXPECT_EQ(suite_names().size(), 21u);
	std::set<std::string> seen;
	for (auto const &n : suite_names())
	{
		EXPECT_TRUE(seen.insert(n).second) << n;
		Suite s = make_suite(n);
		EXPECT_EQ(s.name, n);
		EXPECT_FALSE(s.items.empty()) << n;
	}
	EXPECT_THROW(make_suite("no-such-suite"), std::invalid_argument);
}

TEST(Suite, SeriesMatchesIndependentExpansion)
{
	EXPECT_EQ(pbw_series(12), qons::testing::pbw_series(12));
	EXPECT_EQ(pbw_series(5), (std::vector<long>{1, 2, 4, 8, 14, 24}));
}

TEST(Suite, MinimalBounds)
{
	EXPECT_EQ(make_suite("t0-automorphism").min_bound(), 10);
	EXPECT_EQ(make_suite("t1-bdelta").min_bound(), 4);
	EXPECT_EQ(make_suite("braid-translates").min_bound(), 9);
	EXPECT_EQ(make_suite("bdelta-real").min_bound(), 7);
	EXPECT_EQ(make_suite("real-real").min_bound(), 12);
	EXPECT_EQ(make_suite("b1-bndelta").min_bound(), 9);
	EXPECT_EQ(make_suite("imaginary-commute").min_bound(), 10);
	EXPECT_EQ(make_suite("top-component").min_bound(), 7);
	EXPECT_EQ(make_suite("rn-closed-form").min_bound(), 0);
	SuiteOptions o;
	o.bound = 6;
	EXPECT_THROW(run_suites({"imaginary-commute"}, o), SuiteBoundError);
	o.allow_skips = true;
	auto rep = run_suites({"imaginary-commute"}, o);
	EXPECT_EQ(rep.passed, 1u);
	EXPECT_EQ(rep.skipped, 3u);
	EXPECT_TRUE(rep.pass());
}

TEST(Suite, AllPassAtDefaultBound)
{
	SuiteOptions o;
	o.bound = 12;
	o.jobs = int(jobs());
	auto rep = run_suites(suite_names(), o);
	for (auto const &r : rep.items)
		EXPECT_EQ(r.status, ItemStatus::pass) << describe(r);
	EXPECT_EQ(rep.skipped, 0u);
	EXPECT_TRUE(rep.pass());
}

TEST(Suite, DeterministicAcrossJobs)
{
	std::vector<std::string> names = {"bdelta-real", "cm-ordered", "classical-limit", "fn-alt"};
	SuiteOptions a, b;
	a.bound = b.bound = 10;
	a.jobs = 1;
	b.jobs = 4;
	auto ra = run_suites(names, a), rb = run_suites(names, b);
	ASSERT_EQ(ra.items.size(), rb.items.size());
	for (size_t i = 0; i < ra.items.size(); ++i)
	{
		EXPECT_EQ(ra.items[i].suite, rb.items[i].suite);
		EXPECT_EQ(ra.items[i].identity, rb.items[i].identity);
		EXPECT_EQ(ra.items[i].params, rb.items[i].params);
		EXPECT_EQ(ra.items[i].status, rb.items[i].status);
		EXPECT_EQ(ra.items[i].witness, rb.items[i].witness);
	}
}
