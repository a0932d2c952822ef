#include "qonsager/cli.hpp"
#include "qonsager/errors.hpp"
#include "qonsager/expr.hpp"
#include "qonsager/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qons {

namespace {

using ojson = nlohmann::ordered_json;

std::string monomial_text(PBWMonomial const &m)
{
	return m.is_unit() ? "1" : m.str();
}

ojson pbw_to_json(PBWElement const &x)
{
	ojson terms = ojson::array();
	for (auto const &[m, s] : x.terms())
		terms.push_back({monomial_text(m), to_json(s)});
	return terms;
}

ojson ncpoly_terms(NcPoly const &x)
{
	return ojson::parse(to_json(x).dump());
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
	std::sort(out.begin(), out.end(),
	          [](Root const &a, Root const &b) { return root_compare(a, b) < 0; });
	return out;
}

std::string params_text(Params const &p)
{
	std::string s;
	for (auto const &[k, v] : p)
		s += (s.empty() ? "" : ", ") + k + "=" + std::to_string(v);
	return s;
}

void print_report(std::ostream &out, SuiteReport const &rep, bool timing)
{
	for (auto const &r : rep.items)
	{
		out << std::left << std::setw(8) << to_string(r.status) << r.suite << ": " << r.identity;
		if (!r.params.empty())
			out << " (" << params_text(r.params) << ")";
		out << ", degree " << r.degree;
		if (timing && r.status != ItemStatus::skipped)
			out << ", " << r.millis << " ms";
		out << "\n";
		if (r.status != ItemStatus::pass && !r.witness.empty())
			out << "        " << r.witness << "\n";
	}
	out << rep.items.size() << " items: " << rep.passed << " passed, " << rep.failed
	    << " failed, " << rep.skipped << " skipped, " << rep.errors << " errors\n";
}

CMode parse_mode(std::string const &s)
{
	return s == "zero" ? CMode::zero : CMode::generic;
}

struct Options
{
	std::string expr, lhs, rhs, mode = "free", cmode = "generic", cache, output;
	std::vector<std::string> suites;
	int bound = 12, jobs = 1, max = 8;
	bool json = false, allow_skips = false, no_timing = false;
};

int cmd_expand(Options const &o, std::ostream &out)
{
	Expr e = parse_expr(o.expr);
	NcPoly x = eval_free(e);
	if (o.json)
		out << ojson{{"schema_version", report_schema_version},
		             {"expr", render(e)},
		             {"text", x.str()},
		             {"terms", ncpoly_terms(x)}}
		           .dump(2)
		    << "\n";
	else
		out << x.str() << "\n";
	return exit_ok;
}

int cmd_normalize(Options const &o, std::ostream &out)
{
	Expr e = parse_expr(o.expr);
	ojson j{{"schema_version", report_schema_version}, {"expr", render(e)}, {"mode", o.mode}};
	std::string text;
	if (o.mode == "pbw")
	{
		PBWElement x = eval_pbw(e);
		text = x.str();
		j["text"] = text;
		j["terms"] = pbw_to_json(x);
	}
	else
	{
		NcPoly x = SystemStore::get(CMode::generic, o.bound).reduce(eval_free(e));
		text = x.str();
		j["bound"] = o.bound;
		j["text"] = text;
		j["terms"] = ncpoly_terms(x);
	}
	out << (o.json ? j.dump(2) : text) << "\n";
	return exit_ok;
}

int cmd_check(Options const &o, std::ostream &out)
{
	Expr l = parse_expr(o.lhs), r = parse_expr(o.rhs);
	bool pass;
	std::string witness;
	if (o.mode == "pbw")
	{
		PBWElement d = eval_pbw(l) - eval_pbw(r);
		pass = d.is_zero();
		witness = d.str();
	}
	else
	{
		auto rep = verify_identity(eval_free(l), eval_free(r), SystemStore::get(CMode::generic, o.bound));
		pass = rep.pass;
		witness = rep.witness.str();
	}
	if (o.json)
	{
		ojson j{{"schema_version", report_schema_version},
		        {"lhs", render(l)},
		        {"rhs", render(r)},
		        {"mode", o.mode},
		        {"status", pass ? "pass" : "fail"}};
		if (!pass)
			j["witness"] = witness;
		out << j.dump(2) << "\n";
	}
	else
	{
		out << (pass ? "pass" : "fail") << "\n";
		if (!pass)
			out << "lhs - rhs = " << witness << "\n";
	}
	return pass ? exit_ok : exit_failure;
}

int cmd_verify(Options const &o, std::ostream &out)
{
	std::vector<std::string> names;
	for (auto const &s : o.suites)
	{
		if (s == "all")
			names.insert(names.end(), suite_names().begin(), suite_names().end());
		else
		{
			make_suite(s);
			names.push_back(s);
		}
	}
	SuiteOptions opts;
	opts.bound = o.bound;
	opts.jobs = o.jobs;
	opts.allow_skips = o.allow_skips;
	SuiteReport rep = run_suites(names, opts);
	if (o.json)
		out << report_to_json(rep, opts, names, !o.no_timing).dump(2) << "\n";
	else
		print_report(out, rep, !o.no_timing);
	if (rep.failed)
		return exit_failure;
	return rep.errors ? exit_capacity : exit_ok;
}

int cmd_dims(Options const &o, std::ostream &out)
{
	RewriteSystem const &sys = SystemStore::get(CMode::generic, o.max);
	std::vector<long> series = pbw_series(o.max);
	bool pass = true;
	ojson rows = ojson::array();
	if (!o.json)
		out << "degree normal_words pbw_monomials series\n";
	for (int d = 0; d <= o.max; ++d)
	{
		long nw = sys.normal_count(d);
		long pm = long(pbw_monomials(d).size());
		pass = pass && nw == pm && pm == series[d];
		if (o.json)
			rows.push_back({{"degree", d}, {"normal_words", nw}, {"pbw_monomials", pm}, {"series", series[d]}});
		else
			out << d << " " << nw << " " << pm << " " << series[d] << "\n";
	}
	if (o.json)
		out << ojson{{"schema_version", report_schema_version}, {"rows", rows}, {"pass", pass}}.dump(2)
		    << "\n";
	return pass ? exit_ok : exit_failure;
}

int cmd_complete(Options const &o, std::ostream &out)
{
	CMode mode = parse_mode(o.cmode);
	RewriteSystem sys = RewriteSystem::initial(mode);
	if (std::filesystem::exists(o.cache))
	{
		std::ifstream in(o.cache);
		sys = RewriteSystem::load(in, mode);
	}
	int before = sys.completed_degree();
	if (before < o.bound)
	{
		sys = complete(sys, o.bound);
		std::ofstream f(o.cache);
		if (!f)
			throw std::invalid_argument("cannot write " + o.cache);
		sys.save(f);
	}
	out << "mode " << to_string(mode) << ", completed degree " << sys.completed_degree() << ", "
	    << sys.rules().size() << " rules" << (before < o.bound ? ", written to " : ", read from ")
	    << o.cache << "\n";
	return exit_ok;
}

int cmd_export(Options const &o, std::ostream &out)
{
	ojson j = structure_constants(o.max);
	if (o.output.empty())
	{
		out << j.dump(2) << "\n";
		return exit_ok;
	}
	std::ofstream f(o.output);
	if (!f)
		throw std::invalid_argument("cannot write " + o.output);
	f << j.dump(2) << "\n";
	out << j["entries"].size() << " pairs written to " << o.output << "\n";
	return exit_ok;
}

} // namespace

ojson report_to_json(SuiteReport const &rep, SuiteOptions const &opts,
                     std::vector<std::string> const &suites, bool timing)
{
	ojson items = ojson::array();
	for (auto const &r : rep.items)
	{
		ojson params = ojson::object();
		for (auto const &[k, v] : r.params)
			params[k] = v;
		ojson it{{"suite", r.suite},
		         {"identity", r.identity},
		         {"params", params},
		         {"degree", r.degree},
		         {"status", to_string(r.status)},
		         {"millis", timing ? r.millis : 0}};
		if (!r.witness.empty())
			it["witness"] = r.witness;
		items.push_back(std::move(it));
	}
	return ojson{{"schema_version", report_schema_version},
	             {"bound", opts.bound},
	             {"allow_skips", opts.allow_skips},
	             {"suites", suites},
	             {"items", items},
	             {"summary",
	              {{"items", rep.items.size()},
	               {"passed", rep.passed},
	               {"failed", rep.failed},
	               {"skipped", rep.skipped},
	               {"errors", rep.errors}}}};
}

ojson structure_constants(int max_height)
{
	ojson entries = ojson::array();
	auto roots = roots_up_to(max_height);
	for (Root const &g : roots)
		for (Root const &h : roots)
		{
			if (g.height() + h.height() > max_height || root_compare(h, g) >= 0)
				continue;
			entries.push_back({{"left", g.str()}, {"right", h.str()}, {"terms", pbw_to_json(straighten(g, h))}});
		}
	return ojson{{"schema_version", report_schema_version},
	             {"max_height", max_height},
	             {"order", "real0 ascending, imaginary descending, real1 descending"},
	             {"entries", entries}};
}

int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	Options o;
	CLI::App app{"Exact computations in the q-Onsager algebra", "qonsager"};
	app.require_subcommand(1, 1);

	auto *expand = app.add_subcommand("expand", "print the free-algebra form of an expression");
	expand->add_option("--expr", o.expr, "expression")->required();
	expand->add_flag("--json", o.json, "JSON output");

	auto *normalize = app.add_subcommand("normalize", "canonical form modulo the relations");
	normalize->add_option("--mode", o.mode, "free or pbw")
	    ->check(CLI::IsMember({"free", "pbw"}))
	    ->capture_default_str();
	normalize->add_option("--expr", o.expr, "expression")->required();
	normalize->add_option("--bound", o.bound, "completion degree (free mode)")
	    ->check(CLI::Range(0, 40))
	    ->capture_default_str();
	normalize->add_flag("--json", o.json, "JSON output");

	auto *check = app.add_subcommand("check", "check lhs = rhs modulo the relations");
	check->add_option("--lhs", o.lhs, "left-hand side")->required();
	check->add_option("--rhs", o.rhs, "right-hand side")->required();
	check->add_option("--mode", o.mode, "free or pbw")
	    ->check(CLI::IsMember({"free", "pbw"}))
	    ->capture_default_str();
	check->add_option("--bound", o.bound, "completion degree (free mode)")
	    ->check(CLI::Range(0, 40))
	    ->capture_default_str();
	check->add_flag("--json", o.json, "JSON output");

	auto *verify = app.add_subcommand("verify", "run verification suites");
	verify->add_option("--suite", o.suites, "suite name or all; repeatable or comma separated")
	    ->required()
	    ->delimiter(',');
	verify->add_option("--bound", o.bound, "completion degree")
	    ->check(CLI::Range(0, 40))
	    ->capture_default_str();
	verify->add_option("--jobs", o.jobs, "worker threads")
	    ->check(CLI::Range(1, 256))
	    ->capture_default_str();
	verify->add_flag("--json", o.json, "JSON report");
	verify->add_flag("--allow-skips", o.allow_skips, "skip items above the bound instead of refusing");
	verify->add_flag("--no-timing", o.no_timing, "omit timings, for reproducible reports");

	auto *dims = app.add_subcommand("dims", "normal words and PBW monomials per degree");
	dims->add_option("--max", o.max, "maximal degree")->required()->check(CLI::Range(0, 40));
	dims->add_flag("--json", o.json, "JSON output");

	auto *comp = app.add_subcommand("complete", "complete the rewrite system and persist it");
	comp->add_option("--bound", o.bound, "completion degree")->required()->check(CLI::Range(0, 40));
	comp->add_option("--cache", o.cache, "cache file")->required();
	comp->add_option("--mode", o.cmode, "generic or zero")
	    ->check(CLI::IsMember({"generic", "zero"}))
	    ->capture_default_str();

	auto *exp = app.add_subcommand("export", "structure constants of the PBW straightening as JSON");
	exp->add_option("--max-height", o.max, "maximal height sum")->required()->check(CLI::Range(2, 40));
	exp->add_option("--output", o.output, "output file; standard output otherwise");

	std::vector<char const *> argv{"qonsager"};
	for (auto const &a : args)
		argv.push_back(a.c_str());
	try
	{
		app.parse(int(argv.size()), argv.data());
	}
	catch (CLI::ParseError const &e)
	{
		return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
	}

	try
	{
		if (expand->parsed())
			return cmd_expand(o, out);
		if (normalize->parsed())
			return cmd_normalize(o, out);
		if (check->parsed())
			return cmd_check(o, out);
		if (verify->parsed())
			return cmd_verify(o, out);
		if (dims->parsed())
			return cmd_dims(o, out);
		if (comp->parsed())
			return cmd_complete(o, out);
		return cmd_export(o, out);
	}
	catch (ParseError const &e)
	{
		err << "parse error: " << e.what() << "\n";
		return exit_usage;
	}
	catch (BoundExceeded const &e)
	{
		err << "capacity error: " << e.what() << "\n";
		return exit_capacity;
	}
	catch (CapacityError const &e)
	{
		err << "capacity error: " << e.what() << "\n";
		return exit_capacity;
	}
	catch (SuiteBoundError const &e)
	{
		err << "error: " << e.what() << "\n";
		return exit_usage;
	}
	catch (FormatError const &e)
	{
		err << "cache mismatch: " << e.what() << "\n";
		return exit_usage;
	}
	catch (ModeMismatch const &e)
	{
		err << "cache mismatch: " << e.what() << "\n";
		return exit_usage;
	}
	catch (std::exception const &e)
	{
		err << "error: " << e.what() << "\n";
		return exit_usage;
	}
}

} // namespace qons
