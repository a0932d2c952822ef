#include "qonsager/rewrite.hpp"
#include "qonsager/errors.hpp"
#include "qonsager/serialize.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <queue>
#include <tuple>

namespace qons {

using nlohmann::json;

namespace {

constexpr char const *format_name = "qonsager-rewrite-system";
constexpr int format_version = 1;
constexpr char const *order_name = "deglex g0>g1";

using CertKey = std::tuple<int, Word, Word>;
using CertMap = std::map<CertKey, Scalar>;

void cert_add(CertMap &acc, Certificate const &c, Scalar const &s, Word l, Word r)
{
	for (auto const &t : c)
	{
		auto &v = acc[CertKey{t.gen, l * t.left, t.right * r}];
		v += s * t.coef;
	}
}

Certificate cert_of(CertMap const &m)
{
	Certificate c;
	for (auto const &[k, s] : m)
		if (!s.is_zero())
			c.push_back({s, std::get<1>(k), std::get<0>(k), std::get<2>(k)});
	return c;
}

} // namespace

RewriteSystem RewriteSystem::initial(CMode mode, bool certificates)
{
	auto [r0, r1] = defining_relations(mode);
	RewriteSystem s;
	s.mode_ = mode;
	int gen = 0;
	for (NcPoly const *r : {&r0, &r1})
	{
		auto const &[lead, lc] = r->terms().front();
		Scalar inv = lc.inverse();
		s.rules_.push_back({lead, -(*r - NcPoly(lead, lc)) * inv});
		if (certificates)
			s.certs_.push_back({{inv, Word{}, gen, Word{}}});
		++gen;
	}
	s.rebuild_index();
	return s;
}

RewriteSystem RewriteSystem::from_rules(CMode mode, int completed_degree,
                                        std::vector<RewriteRule> rules)
{
	RewriteSystem s;
	s.mode_ = mode;
	s.completed_degree_ = completed_degree;
	s.rules_ = std::move(rules);
	s.rebuild_index();
	return s;
}

void RewriteSystem::rebuild_index()
{
	index_.clear();
	for (size_t i = 0; i < rules_.size(); ++i)
	{
		Word l = rules_[i].lead;
		if (index_.size() <= l.len)
			index_.resize(l.len + 1);
		index_[l.len][l] = i;
	}
}

std::optional<std::pair<size_t, int>> RewriteSystem::find_lead(Word w) const
{
	for (int i = 0; i < w.len; ++i)
		for (int n = 1; n < int(index_.size()) && i + n <= w.len; ++n)
		{
			auto const &m = index_[n];
			if (m.empty())
				continue;
			auto it = m.find(w.sub(i, n));
			if (it != m.end())
				return std::pair{it->second, i};
		}
	return std::nullopt;
}

NcPoly RewriteSystem::reduce_impl(NcPoly const &x, std::vector<ReductionStep> *trace) const
{
	std::map<Word, Scalar, std::greater<Word>> work;
	for (auto const &[w, s] : x.terms())
		work.emplace(w, s);
	std::vector<std::pair<Word, Scalar>> out;
	while (!work.empty())
	{
		auto it = work.begin();
		Word w = it->first;
		auto hit = find_lead(w);
		if (!hit)
		{
			out.emplace_back(w, std::move(it->second));
			work.erase(it);
			continue;
		}
		Scalar s = std::move(it->second);
		work.erase(it);
		auto const &rule = rules_[hit->first];
		int pos = hit->second, n = rule.lead.len;
		Word u = w.sub(0, pos), v = w.sub(pos + n, w.len - pos - n);
		if (trace)
			trace->push_back({s, u, hit->first, v});
		for (auto const &[t, k] : rule.tail.terms())
		{
			auto [jt, fresh] = work.try_emplace(u * t * v, s * k);
			if (!fresh)
			{
				jt->second += s * k;
				if (jt->second.is_zero())
					work.erase(jt);
			}
		}
	}
	return NcPoly::from_terms(std::move(out));
}

NcPoly RewriteSystem::reduce(NcPoly const &x) const
{
	if (x.degree() > completed_degree_)
		throw BoundExceeded(x.degree(), completed_degree_);
	return reduce_impl(x, nullptr);
}

NcPoly RewriteSystem::reduce_traced(NcPoly const &x, std::vector<ReductionStep> &trace) const
{
	if (x.degree() > completed_degree_)
		throw BoundExceeded(x.degree(), completed_degree_);
	return reduce_impl(x, &trace);
}

std::vector<Word> RewriteSystem::normal_words(int degree) const
{
	if (degree > completed_degree_)
		throw BoundExceeded(degree, completed_degree_);
	std::vector<Word> out;
	// extend letter by letter; only factors ending at the new letter can be leads
	std::function<void(Word)> grow = [&](Word w) {
		if (w.len == degree)
		{
			out.push_back(w);
			return;
		}
		for (int g : {1, 0})
		{
			Word x = w * Word::letter(g);
			bool ok = true;
			for (int n = 1; ok && n < int(index_.size()) && n <= x.len; ++n)
				ok = !index_[n].count(x.sub(x.len - n, n));
			if (ok)
				grow(x);
		}
	};
	grow(Word{});
	return out;
}

long RewriteSystem::normal_count(int degree) const
{
	return long(normal_words(degree).size());
}

bool RewriteSystem::operator==(RewriteSystem const &b) const
{
	return mode_ == b.mode_ && completed_degree_ == b.completed_degree_ &&
	       rules_ == b.rules_;
}

void RewriteSystem::save(std::ostream &out) const
{
	json rules = json::array();
	for (auto const &r : rules_)
		rules.push_back({{"lead", r.lead.compact()}, {"tail", to_json(r.tail)}});
	json j = {{"format", format_name},
	          {"version", format_version},
	          {"order", order_name},
	          {"c_mode", to_string(mode_)},
	          {"completed_degree", completed_degree_},
	          {"rules", rules}};
	out << j.dump(1) << '\n';
}

RewriteSystem RewriteSystem::load(std::istream &in, std::optional<CMode> expected)
{
	json j;
	try
	{
		j = json::parse(in);
	}
	catch (json::exception const &e)
	{
		throw FormatError(std::string("malformed rewrite system: ") + e.what());
	}
	try
	{
		if (j.at("format") != format_name)
			throw FormatError("not a rewrite system file");
		if (j.at("version") != format_version)
			throw FormatError("unsupported rewrite system version " + j.at("version").dump());
		if (j.at("order") != order_name)
			throw FormatError("unsupported monomial order " + j.at("order").dump());
		std::string m = j.at("c_mode").get<std::string>();
		if (m != "generic" && m != "zero")
			throw FormatError("unknown c_mode '" + m + "'");
		CMode mode = m == "zero" ? CMode::zero : CMode::generic;
		if (expected && *expected != mode)
			throw ModeMismatch("rewrite system has c_mode " + m + ", expected " +
			                   to_string(*expected));
		std::vector<RewriteRule> rules;
		for (auto const &r : j.at("rules"))
		{
			RewriteRule rule{Word::parse_compact(r.at("lead").get<std::string>()),
			                 ncpoly_from_json(r.at("tail"))};
			if (!rule.tail.is_zero() && !(rule.tail.terms().front().first < rule.lead))
				throw FormatError("rule tail not below its lead " + rule.lead.compact());
			rules.push_back(std::move(rule));
		}
		return from_rules(mode, j.at("completed_degree").get<int>(), std::move(rules));
	}
	catch (json::exception const &e)
	{
		throw FormatError(std::string("malformed rewrite system: ") + e.what());
	}
}

namespace {

struct Overlap
{
	Word w;
	size_t a, b;
	int k; // overlap length
	bool operator>(Overlap const &o) const
	{
		return std::tie(w, a, b, k) > std::tie(o.w, o.a, o.b, o.k);
	}
};

class Completer
{
	RewriteSystem &s_;
	std::vector<RewriteRule> &rules_;
	std::vector<Certificate> &certs_;
	std::vector<std::unordered_map<Word, size_t, WordHash>> &index_;
	std::vector<bool> alive_;
	std::priority_queue<Overlap, std::vector<Overlap>, std::greater<Overlap>> queue_;
	int bound_, old_degree_;
	size_t n_old_;
	bool certs_on_;
	CompletionOptions const &opts_;
	int degree_ = 0;

  public:
	Completer(RewriteSystem &s, std::vector<RewriteRule> &rules, std::vector<Certificate> &certs,
	          std::vector<std::unordered_map<Word, size_t, WordHash>> &index, int bound,
	          int old_degree, CompletionOptions const &opts)
	    : s_(s), rules_(rules), certs_(certs), index_(index), alive_(rules.size(), true),
	      bound_(bound), old_degree_(old_degree), n_old_(rules.size()),
	      certs_on_(!certs.empty()), opts_(opts)
	{}

	void overlaps(size_t a, size_t b)
	{
		Word la = rules_[a].lead, lb = rules_[b].lead;
		int m = std::min(la.len, lb.len);
		for (int k = 1; k < m; ++k)
		{
			if (la.sub(la.len - k, k) != lb.sub(0, k))
				continue;
			Word w = la * lb.sub(k, lb.len - k);
			if (w.len > bound_)
				continue;
			if (a < n_old_ && b < n_old_ && w.len <= old_degree_)
				continue;
			queue_.push({w, a, b, k});
		}
	}

	void enqueue_all(size_t i)
	{
		for (size_t j = 0; j < rules_.size(); ++j)
			if (alive_[j])
			{
				overlaps(i, j);
				if (j != i)
					overlaps(j, i);
			}
	}

	void index_remove(size_t i)
	{
		index_[rules_[i].lead.len].erase(rules_[i].lead);
	}

	void index_add(size_t i)
	{
		Word l = rules_[i].lead;
		if (index_.size() <= l.len)
			index_.resize(l.len + 1);
		index_[l.len][l] = i;
	}

	// reduce p fully, with its certificate tracked alongside
	NcPoly reduce(NcPoly const &p, CertMap &cert)
	{
		std::vector<ReductionStep> trace;
		NcPoly r = s_.reduce_traced_unguarded(p, certs_on_ ? &trace : nullptr);
		for (auto const &st : trace)
			cert_add(cert, certs_[st.rule], -st.coef, st.left, st.right);
		return r;
	}

	void add_rule(NcPoly const &p, CertMap cert)
	{
		if (rules_.size() >= opts_.max_rules)
			throw CapacityError("rule limit " + std::to_string(opts_.max_rules) + " reached",
			                    degree_);
		auto const &[lead, lc] = p.terms().front();
		Scalar inv = lc.inverse();
		NcPoly tail = -(p - NcPoly(lead, lc)) * inv;
		for (auto &[k, v] : cert)
			v *= inv;

		// rules whose lead the new lead divides leave, to be reduced and re-added
		std::vector<std::pair<NcPoly, CertMap>> pending;
		for (size_t i = 0; i < rules_.size(); ++i)
			if (alive_[i] && rules_[i].lead.find(lead) >= 0)
			{
				alive_[i] = false;
				index_remove(i);
				CertMap c;
				if (certs_on_)
					cert_add(c, certs_[i], 1, Word{}, Word{});
				pending.emplace_back(NcPoly(rules_[i].lead) - rules_[i].tail, std::move(c));
			}

		size_t id = rules_.size();
		rules_.push_back({lead, tail});
		if (certs_on_)
			certs_.push_back(cert_of(cert));
		alive_.push_back(true);
		index_add(id);

		// interreduce tails
		for (size_t i = 0; i < id; ++i)
		{
			if (!alive_[i])
				continue;
			bool hit = false;
			for (auto const &[w, k] : rules_[i].tail.terms())
				if (w.find(lead) >= 0)
				{
					hit = true;
					break;
				}
			if (!hit)
				continue;
			CertMap c;
			if (certs_on_)
				cert_add(c, certs_[i], 1, Word{}, Word{});
			// lead - tail' = (lead - tail) + (tail - tail')
			CertMap steps;
			NcPoly t = reduce(rules_[i].tail, steps);
			for (auto &[k, v] : steps)
				c[k] -= v;
			rules_[i].tail = t;
			if (certs_on_)
				certs_[i] = cert_of(c);
		}

		enqueue_all(id);
		for (auto &[q, c] : pending)
		{
			NcPoly r = reduce(q, c);
			if (!r.is_zero())
				add_rule(r, std::move(c));
		}
	}

	void run()
	{
		for (size_t i = 0; i < rules_.size(); ++i)
			for (size_t j = 0; j < rules_.size(); ++j)
				overlaps(i, j);
		while (!queue_.empty())
		{
			Overlap o = queue_.top();
			queue_.pop();
			if (!alive_[o.a] || !alive_[o.b])
				continue;
			if (o.w.len > degree_)
			{
				degree_ = o.w.len;
				if (opts_.progress)
					opts_.progress(degree_, std::count(alive_.begin(), alive_.end(), true));
			}
			auto const &ra = rules_[o.a];
			auto const &rb = rules_[o.b];
			Word suf = rb.lead.sub(o.k, rb.lead.len - o.k);
			Word pre = ra.lead.sub(0, ra.lead.len - o.k);
			// (la - ta) suf - pre (lb - tb)
			NcPoly sp = pre * rb.tail - ra.tail * NcPoly(suf);
			CertMap cert;
			if (certs_on_)
			{
				cert_add(cert, certs_[o.a], 1, Word{}, suf);
				cert_add(cert, certs_[o.b], -1, pre, Word{});
			}
			NcPoly r = reduce(sp, cert);
			if (!r.is_zero())
				add_rule(r, std::move(cert));
		}
	}

	std::vector<bool> const &alive() const { return alive_; }
};

} // namespace

NcPoly RewriteSystem::reduce_traced_unguarded(NcPoly const &x,
                                              std::vector<ReductionStep> *trace) const
{
	return reduce_impl(x, trace);
}

RewriteSystem complete(RewriteSystem const &sys, int bound, CompletionOptions const &opts)
{
	if (bound < 4)
		throw std::invalid_argument("completion bound must be at least 4");
	if (bound > Word::max_length)
		throw CapacityError("completion bound above 64", 0);
	RewriteSystem s = sys;
	if (bound <= s.completed_degree_)
		return s;
	if (opts.certificates && !s.has_certificates())
		throw std::invalid_argument("certificates need a system started with them");
	std::vector<bool> alive;
	try
	{
		Completer c(s, s.rules_, s.certs_, s.index_, bound, s.completed_degree_, opts);
		c.run();
		alive = c.alive();
	}
	catch (std::bad_alloc const &)
	{
		throw CapacityError("out of memory during completion", s.completed_degree_);
	}

	std::vector<size_t> order;
	for (size_t i = 0; i < alive.size(); ++i)
		if (alive[i])
			order.push_back(i);
	std::sort(order.begin(), order.end(),
	          [&](size_t a, size_t b) { return s.rules_[a].lead < s.rules_[b].lead; });
	std::vector<RewriteRule> rules;
	std::vector<Certificate> certs;
	for (size_t i : order)
	{
		rules.push_back(std::move(s.rules_[i]));
		if (s.has_certificates())
			certs.push_back(std::move(s.certs_[i]));
	}
	s.rules_ = std::move(rules);
	s.certs_ = std::move(certs);
	s.completed_degree_ = bound;
	s.rebuild_index();
	return s;
}

NcPoly expand_certificate(Certificate const &cert, CMode mode)
{
	auto [r0, r1] = defining_relations(mode);
	NcPoly out;
	for (auto const &t : cert)
		out += t.coef * (NcPoly(t.left) * (t.gen == 0 ? r0 : r1) * NcPoly(t.right));
	return out;
}

namespace {

struct Store
{
	std::mutex mu;
	std::map<std::pair<CMode, int>, std::unique_ptr<RewriteSystem>> systems;
	std::optional<std::string> dir;
};

Store &store()
{
	static Store s;
	return s;
}

std::string cache_dir(Store &s)
{
	if (!s.dir)
	{
		char const *e = std::getenv("QONSAGER_CACHE_DIR");
		s.dir = e ? e : "";
	}
	return *s.dir;
}

} // namespace

void SystemStore::set_cache_dir(std::string dir)
{
	std::lock_guard lock(store().mu);
	store().dir = std::move(dir);
}

RewriteSystem const &SystemStore::get(CMode mode, int bound)
{
	Store &st = store();
	std::lock_guard lock(st.mu);
	auto key = std::pair{mode, bound};
	if (auto it = st.systems.find(key); it != st.systems.end())
		return *it->second;

	std::string dir = cache_dir(st);
	std::filesystem::path file;
	if (!dir.empty())
	{
		file = std::filesystem::path(dir) /
		       ("qonsager-" + to_string(mode) + "-" + std::to_string(bound) + ".json");
		std::ifstream in(file);
		if (in)
		{
			auto sys = RewriteSystem::load(in, mode);
			if (sys.completed_degree() == bound)
				return *(st.systems[key] = std::make_unique<RewriteSystem>(std::move(sys)));
		}
	}

	// continue from the largest smaller system already built
	RewriteSystem const *base = nullptr;
	for (auto const &[k, v] : st.systems)
		if (k.first == mode && k.second < bound)
			base = v.get();
	RewriteSystem sys = complete(base ? *base : RewriteSystem::initial(mode), bound);
	if (!file.empty())
	{
		std::error_code ec;
		std::filesystem::create_directories(file.parent_path(), ec);
		std::ofstream out(file);
		if (out)
			sys.save(out);
	}
	return *(st.systems[key] = std::make_unique<RewriteSystem>(std::move(sys)));
}

} // namespace qons
