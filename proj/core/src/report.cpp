#include "gda/report.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace gda {

using nlohmann::ordered_json;

bool ModelCheckReport::success() const
{
	for (const auto& r : results)
		if (!r.passed) return false;
	return true;
}

namespace {

ordered_json header(std::string_view kind, bool ok)
{
	ordered_json j;
	j["schema"] = report_schema_id;
	j["kind"] = kind;
	j["status"] = ok ? "success" : "failure";
	return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<std::size_t> tree_levels(const DerivationTree& t)
{
	std::vector<std::size_t> level(t.nodes.size(), 0);
	for (const auto& n : t.nodes)
		if (n.parent) level[n.id] = level[*n.parent] + 1;
	return level;
}

std::string move_text(const TreeNode& n)
{
	std::string s(to_string(n.move));
	if (n.move == MoveKind::factorize && n.variant)
		s += " " + std::string(to_string(*n.variant)) + "@" + std::to_string(n.position);
	return s;
}

std::string node_flags(const TreeNode& n)
{
	std::string s;
	if (!n.outcome.empty()) s += " => " + n.outcome;
	if (n.repeat) s += " [repeat]";
	if (n.depth_limit) s += " [depth limit]";
	return s;
}

ordered_json index_json(const Index& i) { return ordered_json::array({i.n, i.m, i.kappa}); }

ordered_json trace_json(const TraceStep& s)
{
	ordered_json j;
	j["rule"] = to_string(s.rule);
	j["detail"] = s.detail;
	j["term"] = to_string(s.before);
	if (s.rule == Rule::primitive) j["reproduces"] = to_string(s.after);
	return j;
}

ordered_json verification_json(const VerificationReport& r)
{
	ordered_json j;
	j["claim"] = to_string(r.claim);
	j["status"] = r.success ? "success" : "failure";
	j["subject"] = r.subject;
	j["residual"] = to_string(r.residual);
	j["trace"] = ordered_json::array();
	for (const auto& s : r.trace) j["trace"].push_back(trace_json(s));
	j["primitive"] = r.primitive ? ordered_json(to_string(*r.primitive)) : ordered_json(nullptr);
	ordered_json counts;
	for (Rule rule : {Rule::law_deletion, Rule::ideal_deletion, Rule::hypothesis_cancellation, Rule::survivor,
	                  Rule::primitive})
		counts[std::string(to_string(rule))] = r.count(rule);
	j["counts"] = counts;
	j["failures"] = r.failures;
	j["nearest_miss"] = r.nearest_miss.empty() ? ordered_json(nullptr) : ordered_json(r.nearest_miss);
	return j;
}

void verification_text(std::ostringstream& os, const VerificationReport& r)
{
	os << to_string(r.claim) << " " << r.subject << ": " << (r.success ? "success" : "failure") << "\n";
	for (const auto& s : r.trace) {
		os << "  " << to_string(s.rule) << ": " << to_string(s.before);
		if (!s.detail.empty()) os << "  {" << s.detail << "}";
		os << "\n";
	}
	os << "  residual: " << to_string(r.residual) << "\n";
	if (r.primitive) os << "  primitive: " << to_string(*r.primitive) << "\n";
	for (const auto& f : r.failures) os << "  failure: " << f << "\n";
	if (!r.nearest_miss.empty()) os << "  nearest miss: " << r.nearest_miss << "\n";
}

}  // namespace

std::string emit_tree(const DerivationTree& tree, ReportFormat format, std::string_view start)
{
	const auto level = tree_levels(tree);
	if (format == ReportFormat::text) {
		std::ostringstream os;
		for (const auto& n : tree.nodes)
			os << std::string(2 * level[n.id], ' ') << "[" << n.id << "] " << move_text(n) << ": "
			   << alpha_canonical(n.condition) << node_flags(n) << "\n";
		for (const auto& p : tree.pruned) os << "pruned: " << p << "\n";
		for (const auto& f : tree.periodic)
			os << "periodic " << f.label << " from node " << f.seed << ": alpha_0=" << to_string(f.alpha0)
			   << " beta_0=" << to_string(f.beta0) << "\n";
		return os.str();
	}
	ordered_json j = header("tree", true);
	j["start"] = start;
	j["d"] = to_string(tree.d);
	j["nodes"] = ordered_json::array();
	j["edges"] = ordered_json::array();
	for (const auto& n : tree.nodes) {
		ordered_json node;
		node["id"] = n.id;
		node["parent"] = n.parent ? ordered_json(*n.parent) : ordered_json(nullptr);
		node["move"] = to_string(n.move);
		node["variant"] = n.variant ? ordered_json(to_string(*n.variant)) : ordered_json(nullptr);
		node["position"] = n.position;
		node["depth"] = n.depth;
		node["level"] = level[n.id];
		node["condition"] = alpha_canonical(n.condition);
		node["outcome"] = n.outcome;
		node["repeat"] = n.repeat;
		node["depth_limit"] = n.depth_limit;
		j["nodes"].push_back(node);
		if (n.parent) j["edges"].push_back({{"from", *n.parent}, {"to", n.id}, {"move", move_text(n)}});
	}
	j["pruned"] = tree.pruned;
	j["periodic"] = ordered_json::array();
	for (const auto& f : tree.periodic)
		j["periodic"].push_back({{"label", f.label},
		                         {"seed", f.seed},
		                         {"repeats", f.repeats},
		                         {"alpha0", index_json(f.alpha0)},
		                         {"beta0", index_json(f.beta0)}});
	return dump(j);
}

std::string emit_verification(const std::vector<VerificationReport>& reports, ReportFormat format)
{
	bool ok = !reports.empty();
	for (const auto& r : reports) ok = ok && r.success;
	if (format == ReportFormat::text) {
		std::ostringstream os;
		for (const auto& r : reports) verification_text(os, r);
		os << (ok ? "status: success" : "status: failure") << "\n";
		return os.str();
	}
	ordered_json j = header("verification", ok);
	j["claim"] = reports.empty() ? "cocycle" : std::string(to_string(reports.front().claim));
	std::string residual = "0";
	for (const auto& r : reports)
		if (!r.residual.is_zero()) {
			residual = to_string(r.residual);
			break;
		}
	j["residual"] = residual;
	j["trace"] = ordered_json::array();
	for (const auto& r : reports)
		for (const auto& s : r.trace) j["trace"].push_back(trace_json(s));
	j["primitive"] = !reports.empty() && reports.front().primitive ? ordered_json(to_string(*reports.front().primitive))
	                                                                : ordered_json(nullptr);
	j["reports"] = ordered_json::array();
	for (const auto& r : reports) j["reports"].push_back(verification_json(r));
	return dump(j);
}

std::string emit_check(const CheckReport& report, ReportFormat format)
{
	if (format == ReportFormat::text) {
		std::ostringstream os;
		os << report.file << ": " << report.generators << " generators, " << report.conditions.size()
		   << " conditions, " << report.hypotheses << " hypotheses\n";
		for (const auto& c : report.conditions) {
			os << "condition " << c.label << " " << c.text << "\n";
			for (const auto& e : c.equations) os << "  " << e.text << (e.holds() ? "" : "  FAIL") << "\n";
		}
		for (const auto& c : report.classes) os << "class " << c << "\n";
		os << "status: success\n";
		return os.str();
	}
	ordered_json j = header("check", true);
	j["file"] = report.file;
	j["generators"] = report.generators;
	j["hypotheses"] = report.hypotheses;
	j["conditions"] = ordered_json::array();
	for (const auto& c : report.conditions) {
		ordered_json cj{{"label", c.label}, {"condition", c.text}, {"equations", ordered_json::array()}};
		for (const auto& e : c.equations)
			cj["equations"].push_back({{"component", std::string(1, e.component)},
			                           {"expected", e.expected},
			                           {"actual", e.actual},
			                           {"text", e.text}});
		j["conditions"].push_back(cj);
	}
	j["classes"] = report.classes;
	return dump(j);
}

std::string emit_model_check(const ModelCheckReport& report, ReportFormat format)
{
	auto status = [](const IdentityResult& r) { return r.passed ? "pass" : r.skipped ? "skipped" : "fail"; };
	if (format == ReportFormat::text) {
		std::ostringstream os;
		os << "model " << to_string(report.field) << ", sign mode " << to_string(report.sign) << ", " << report.trials
		   << " trials, seed " << report.seed << "\n";
		for (const auto& r : report.results) {
			os << "  [" << status(r) << "] " << r.name;
			if (!r.note.empty()) os << "  {" << r.note << "}";
			os << "\n";
		}
		for (const auto& l : report.limitations) os << "  limitation: " << l << "\n";
		os << (report.success() ? "status: success" : "status: failure") << "\n";
		return os.str();
	}
	ordered_json j = header("model-check", report.success());
	j["file"] = report.file;
	j["field"] = to_string(report.field);
	j["sign_mode"] = to_string(report.sign);
	j["trials"] = report.trials;
	j["seed"] = report.seed;
	j["identities"] = ordered_json::array();
	for (const auto& r : report.results)
		j["identities"].push_back({{"name", r.name}, {"status", status(r)}, {"trials", r.trials}, {"note", r.note}});
	j["limitations"] = report.limitations;
	return dump(j);
}

std::string emit_error(std::string_view message, ReportFormat format)
{
	if (format == ReportFormat::text) return "error: " + std::string(message) + "\n";
	ordered_json j;
	j["schema"] = report_schema_id;
	j["kind"] = "error";
	j["status"] = "error";
	j["message"] = message;
	return dump(j);
}

}  // namespace gda
