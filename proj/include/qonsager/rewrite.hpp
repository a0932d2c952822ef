#pragma once

#include "qonsager/freealg.hpp"

#include <functional>
#include <iosfwd>
#include <unordered_map>

namespace qons {

// ideal element lead - tail, every tail word smaller than lead
struct RewriteRule
{
	Word lead;
	NcPoly tail;
	bool operator==(RewriteRule const &) const = default;
};

// coef * left * R_gen * right, with R_0, R_1 the defining relations
struct CertTerm
{
	Scalar coef;
	Word left;
	int gen;
	Word right;
};
using Certificate = std::vector<CertTerm>;

// coef * left * (rule lead - rule tail) * right
struct ReductionStep
{
	Scalar coef;
	Word left;
	size_t rule;
	Word right;
};

struct CompletionOptions
{
	// record each rule as a combination of the defining relations
	bool certificates = false;
	// CapacityError once the rule count passes this
	size_t max_rules = 4096;
	std::function<void(int degree, size_t rules)> progress;
};

// Monic rewrite rules for deglex with g0 > g1, complete for all overlaps of
// length at most completed_degree. A completed system is read-only and its
// reduce is safe to call from several threads.
class RewriteSystem
{
	CMode mode_ = CMode::generic;
	int completed_degree_ = 0;
	std::vector<RewriteRule> rules_;
	std::vector<Certificate> certs_;
	// lead length -> lead -> rule index
	std::vector<std::unordered_map<Word, size_t, WordHash>> index_;

	friend RewriteSystem complete(RewriteSystem const &, int, CompletionOptions const &);
	void rebuild_index();
	NcPoly reduce_impl(NcPoly const &x, std::vector<ReductionStep> *trace) const;

  public:
	RewriteSystem() = default;
	// the two defining relations as rules, completed to degree 0
	static RewriteSystem initial(CMode mode, bool certificates = false);
	static RewriteSystem from_rules(CMode mode, int completed_degree,
	                                std::vector<RewriteRule> rules);

	CMode mode() const { return mode_; }
	int completed_degree() const { return completed_degree_; }
	std::vector<RewriteRule> const &rules() const { return rules_; }
	bool has_certificates() const { return !certs_.empty(); }
	Certificate const &certificate(size_t rule) const { return certs_.at(rule); }

	// index of a rule whose lead is a factor of w, and its position
	std::optional<std::pair<size_t, int>> find_lead(Word w) const;
	bool is_normal(Word w) const { return !find_lead(w); }

	// BoundExceeded if x has degree above completed_degree
	NcPoly reduce(NcPoly const &x) const;
	// also records the steps: x - reduce(x) = sum of the steps
	NcPoly reduce_traced(NcPoly const &x, std::vector<ReductionStep> &trace) const;
	bool is_zero_mod_ideal(NcPoly const &x) const { return reduce(x).is_zero(); }
	// no degree guard; used while completing
	NcPoly reduce_traced_unguarded(NcPoly const &x, std::vector<ReductionStep> *trace) const;

	std::vector<Word> normal_words(int degree) const;
	long normal_count(int degree) const;

	// same rules, mode and degree
	bool operator==(RewriteSystem const &b) const;

	void save(std::ostream &out) const;
	// FormatError on malformed or foreign data; ModeMismatch when expected
	// is given and differs from the stored mode
	static RewriteSystem load(std::istream &in, std::optional<CMode> expected = {});
};

RewriteSystem complete(RewriteSystem const &sys, int bound,
                       CompletionOptions const &opts = {});

// the certificate expanded in the free algebra
NcPoly expand_certificate(Certificate const &cert, CMode mode);

// Process-wide completed systems keyed by mode, grown on demand. When a cache
// directory is set, systems are loaded from and saved to files there.
class SystemStore
{
  public:
	static RewriteSystem const &get(CMode mode, int bound);
	static void set_cache_dir(std::string dir);
};

} // namespace qons
