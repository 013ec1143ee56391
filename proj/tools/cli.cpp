#include "cli.hpp"

#include "gda/error.hpp"
#include "gda/oracle.hpp"
#include "gda/report.hpp"
#include "gda/session.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace gda::cli {

namespace {

struct Options {
	std::string file;
	std::string sign, epsilon, xi, report = "text", field;
	std::optional<int> depth;
	std::uint64_t seed = 1;
	bool literal_m = false;
	std::string start, cls, eta;
	std::vector<std::string> without;
	int trials = 50;
};

ReportFormat format_of(const Options& o) { return o.report == "json" ? ReportFormat::json : ReportFormat::text; }

ConfigOverrides overrides_of(const Options& o)
{
	ConfigOverrides ov;
	if (o.sign == "paper") ov.sign = SignMode::paper_literal;
	if (o.sign == "koszul") ov.sign = SignMode::koszul;
	if (o.epsilon == "pair") ov.epsilon = EpsilonMode::pair;
	if (o.epsilon == "drop") ov.epsilon = EpsilonMode::drop;
	if (o.xi == "sum") ov.xi = XiMode::sum_enriched;
	if (o.xi == "pairs") ov.xi = XiMode::ordered_pairs;
	ov.depth = o.depth;
	if (o.literal_m) ov.literal_m = true;
	return ov;
}

/// Usage problems detected after option parsing.
class UsageError : public Error {
	using Error::Error;
};

std::unique_ptr<Session> load(const Options& o)
{
	auto s = Session::load_file(o.file, overrides_of(o));
	for (const auto& id : o.without)
		if (!s->hypotheses.remove(id)) throw UsageError("no hypothesis with id '" + id + "'");
	return s;
}

const ClassDecl& find_class(const Session& s, const std::string& name)
{
	auto it = s.classes.find(name);
	if (it == s.classes.end()) throw UsageError("unknown class '" + name + "'");
	return it->second;
}

int cmd_check(const Options& o, std::ostream& out)
{
	auto s = load(o);
	CheckReport r;
	r.file = o.file;
	r.generators = s->symbols.symbols().size();
	r.hypotheses = s->hypotheses.size();
	for (const auto& c : s->conditions)
		r.conditions.push_back({c.label, to_string(c.condition), coherence_constraints(c.condition, s->config.coherence)});
	for (const auto& [name, c] : s->classes) r.classes.push_back(name);
	out << emit_check(r, format_of(o));
	return success;
}

int cmd_print(const Options& o, std::ostream& out)
{
	out << dsl::print(dsl::parse(read_file(o.file)));
	return success;
}

int cmd_derive(const Options& o, std::ostream& out)
{
	auto s = load(o);
	const NamedCondition* c = s->find_condition(o.start);
	if (!c) throw UsageError("no condition labelled " + o.start);
	DerivationTree t = derive_tree(c->condition, s->config.derive(), s->symbols, s->ideals);
	out << emit_tree(t, format_of(o), o.start);
	return success;
}

int cmd_verify_class(const Options& o, std::ostream& out)
{
	auto s = load(o);
	const ClassDecl& c = find_class(*s, o.cls);
	const VerifyConfig cfg = s->config.verify();
	std::vector<VerificationReport> reports;
	for (auto d : c.symm) {
		const Term cls = build_class(Term::of(c.phi), c.completions, d, cfg);
		reports.push_back(verify_cocycle(cls, d, s->hypotheses, s->ideals, cfg));
		reports.back().subject = c.name + " by " + std::string(to_string(d));
	}
	out << emit_verification(reports, format_of(o));
	for (const auto& r : reports)
		if (!r.success) return verification_failure;
	return success;
}

int cmd_verify_independence(const Options& o, std::ostream& out)
{
	auto s = load(o);
	const ClassDecl& c = find_class(*s, o.cls);
	std::optional<Factor> eta;
	if (o.eta != "0") {
		auto sym = s->symbols.find(o.eta);
		if (!sym) throw UsageError("unknown generator '" + o.eta + "'");
		eta = make_factor(sym);
	}
	const VerifyConfig cfg = s->config.verify();
	std::vector<VerificationReport> reports;
	for (auto d : c.symm) reports.push_back(verify_independence(c.phi, eta, c.completions, d, s->hypotheses, s->ideals, cfg));
	out << emit_verification(reports, format_of(o));
	for (const auto& r : reports)
		if (!r.success) return verification_failure;
	return success;
}

int cmd_model_check(const Options& o, std::ostream& out)
{
	auto s = load(o);
	const SessionConfig& cfg = s->config;
	ModelCheckReport r;
	r.file = o.file;
	r.sign = cfg.sign;
	r.field = cfg.sign == SignMode::paper_literal ? Field::gf2 : Field::rationals;
	if (o.field == "q") r.field = Field::rationals;
	if (o.field == "gf2") r.field = Field::gf2;
	r.trials = o.trials;
	r.seed = o.seed;
	if ((r.field == Field::gf2) != (cfg.sign == SignMode::paper_literal))
		r.limitations.push_back("field " + std::string(to_string(r.field)) + " is not the faithful pairing for sign mode " +
		                        std::string(to_string(cfg.sign)));
	const Model model = standard_model(r.field);
	std::uint64_t seed = o.seed;
	auto run_identity = [&](const ModelIdentity& id) { r.results.push_back(check_model_identity(id, model, o.trials, seed++)); };

	for (const auto& c : s->conditions) {
		for (const auto& id : leibniz_identities(c.label + " rhs", c.condition.rhs, cfg.d, cfg.sign, cfg.laws)) run_identity(id);
		if (!c.condition.lhs.is_zero())
			for (const auto& id : leibniz_identities(c.label + " lhs", c.condition.lhs, cfg.d, cfg.sign, cfg.laws))
				run_identity(id);
	}
	const VerifyConfig vc = cfg.verify();
	for (const auto& [name, c] : s->classes)
		for (auto d : c.symm) {
			const std::string tag = name + " by " + std::string(to_string(d));
			const Term cls = build_class(Term::of(c.phi), c.completions, d, vc);
			const VerificationReport cocycle = verify_cocycle(cls, d, s->hypotheses, s->ideals, vc);
			OracleCheck oc = report_identities("cocycle " + tag, cocycle, cls, d, vc, model, o.trials, seed++);
			for (const auto& id : oc.identities) run_identity(id);
			r.limitations.insert(r.limitations.end(), oc.limitations.begin(), oc.limitations.end());
			for (const auto& [tname, t] : s->tubas) {
				if (t.d != d || t.psi.name() == c.phi.name()) continue;
				const VerificationReport ind =
				    verify_independence(c.phi, t.psi, c.completions, d, s->hypotheses, s->ideals, vc);
				if (!ind.primitive) continue;
				OracleCheck io = report_identities("independence " + tag + " eta=" + t.psi.name(), ind, *ind.primitive, d,
				                                   vc, model, o.trials, seed++);
				for (const auto& id : io.identities) run_identity(id);
				r.limitations.insert(r.limitations.end(), io.limitations.begin(), io.limitations.end());
			}
		}
	out << emit_model_check(r, format_of(o));
	return r.success() ? success : verification_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	Options o;
	CLI::App app{"gda: symbolic calculus of multiple products on chain-cochain complexes", "gda"};
	app.require_subcommand(1);
	app.fallthrough();
	app.add_option("--sign-mode", o.sign, "Leibniz signs")->check(CLI::IsMember({"paper", "koszul"}));
	app.add_option("--epsilon-mode", o.epsilon, "eps operator")->check(CLI::IsMember({"pair", "drop"}));
	app.add_option("--xi-mode", o.xi, "tuba slot range")->check(CLI::IsMember({"sum", "pairs"}));
	app.add_option("--depth", o.depth, "derivation depth bound")->check(CLI::PositiveNumber);
	app.add_option("--report", o.report, "report format")->check(CLI::IsMember({"text", "json"}));
	app.add_option("--seed", o.seed, "seed for randomized runs");
	app.add_flag("--literal-m-coherence", o.literal_m, "read the m equation with n_j");

	auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "declaration file")->required(); };
	auto* check = app.add_subcommand("check", "elaborate a file and report its coherence equations");
	file_arg(check);
	auto* print = app.add_subcommand("print", "print a file in canonical form");
	file_arg(print);
	auto* derive = app.add_subcommand("derive", "explore the derivation tree from a condition");
	file_arg(derive);
	derive->add_option("--start", o.start, "start condition label, e.g. (000)")->required();
	auto* vclass = app.add_subcommand("verify-class", "verify that a class is a cocycle");
	file_arg(vclass);
	vclass->add_option("--class", o.cls, "class name")->required();
	auto* vind = app.add_subcommand("verify-independence", "verify independence of the class under phi -> phi + eta");
	file_arg(vind);
	vind->add_option("--class", o.cls, "class name")->required();
	vind->add_option("--eta", o.eta, "perturbation generator, or 0")->required();
	auto* mcheck = app.add_subcommand("model-check", "evaluate certified identities in a finite exterior-algebra model");
	file_arg(mcheck);
	mcheck->add_option("--trials", o.trials, "random assignments per identity")->check(CLI::PositiveNumber);
	mcheck->add_option("--field", o.field, "model field")->check(CLI::IsMember({"q", "gf2"}));
	for (auto* sub : {vclass, vind})
		sub->add_option("--without", o.without, "hypothesis id to remove before verifying");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return success;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << "\n";
		return internal_error;
	}

	const ReportFormat fmt = format_of(o);
	try {
		if (*check) return cmd_check(o, out);
		if (*print) return cmd_print(o, out);
		if (*derive) return cmd_derive(o, out);
		if (*vclass) return cmd_verify_class(o, out);
		if (*vind) return cmd_verify_independence(o, out);
		if (*mcheck) return cmd_model_check(o, out);
	} catch (const IncoherentDeclaration& e) {
		err << o.file << ":" << e.what() << "\n";
		if (fmt == ReportFormat::json) out << emit_error(e.what(), fmt);
		return verification_failure;
	} catch (const ParseError& e) {
		err << o.file << ":" << e.what() << "\n";
		if (fmt == ReportFormat::json) out << emit_error(e.what(), fmt);
		return internal_error;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << "\n";
		if (fmt == ReportFormat::json) out << emit_error(e.what(), fmt);
		return internal_error;
	}
	return internal_error;
}

}  // namespace gda::cli
