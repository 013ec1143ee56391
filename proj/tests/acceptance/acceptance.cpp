// Acceptance criteria runner: one [PASS]/[FAIL] line per criterion.
#include "cli.hpp"
#include "gda/error.hpp"
#include "gda/oracle.hpp"
#include "gda/session.hpp"
#include "random_terms.hpp"
#include "schema.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace gda;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Failure {
	std::string why;
};

void require(bool ok, const std::string& why)
{
	if (!ok) throw Failure{why};
}

std::string path(const std::string& rel) { return test::source_path(rel); }

std::vector<std::string> golden_lines(const std::string& name)
{
	std::istringstream in(test::read_text(path("tests/golden/orthogonality/" + name + ".txt")));
	std::vector<std::string> out;
	for (std::string line; std::getline(in, line);)
		if (!line.empty() && line[0] != '#') out.push_back(line);
	return out;
}

DerivationTree tree_for(Session& s, const std::string& label)
{
	const NamedCondition* c = s.find_condition(label);
	require(c != nullptr, "missing condition " + label);
	return derive_tree(c->condition, s.config.derive(), s.symbols, s.ideals);
}

// Derivation trees reproduce every published line, quickly and deterministically.
std::string ac1()
{
	std::size_t checked = 0;
	double worst = 0;
	for (const std::string name : {"00", "I0", "0I", "II", "000", "I0I", "II0", "0II"}) {
		auto s = Session::load_file(path("data/orthogonality.gda"));
		require(s->config.depth == 8, "shipped depth is not 8");
		const auto t0 = Clock::now();
		DerivationTree tree = tree_for(*s, "(" + name + ")");
		const double dt = seconds_since(t0);
		worst = std::max(worst, dt);
		require(dt < 1.0, "tree (" + name + ") took " + std::to_string(dt) + " s");
		const auto lines = tree.canonical_lines();
		for (const auto& g : golden_lines(name)) {
			const std::string want = alpha_canonical(s->parse_condition(g));
			require(std::find(lines.begin(), lines.end(), want) != lines.end(), "(" + name + ") lacks " + g);
			++checked;
		}
		auto again = Session::load_file(path("data/orthogonality.gda"));
		require(tree_for(*again, "(" + name + ")").lines() == tree.lines(), "(" + name + ") is not deterministic");
	}
	std::ostringstream os;
	os << checked << " golden lines, slowest tree " << static_cast<int>(worst * 1000) << " ms";
	return os.str();
}

// Periodic family from (00): indices follow the recurrence and every relation is coherent.
std::string ac2()
{
	auto s = Session::load_file(path("data/orthogonality.gda"));
	DerivationTree tree = tree_for(*s, "(00)");
	require(tree.periodic.size() == 1, "expected one periodic family, found " + std::to_string(tree.periodic.size()));
	const PeriodicFamily& f = tree.periodic.front();
	require(f.label == "(II)", "family label " + f.label);
	const std::vector<std::pair<Index, Index>> frozen{{{2, -1, 0}, {0, -1, 0}},   {{3, -1, 0}, {-1, -1, 0}},
	                                                  {{5, -1, 0}, {-3, -1, 0}},  {{9, -1, 0}, {-7, -1, 0}},
	                                                  {{17, -1, 0}, {-15, -1, 0}}, {{33, -1, 0}, {-31, -1, 0}}};
	Index a{2, -1, 0}, b{0, -1, 0};
	const Index shift{1, -1, 0};
	for (int k = 0; k <= 5; ++k) {
		require(f.alpha(k) == frozen[k].first && f.beta(k) == frozen[k].second,
		        "k=" + std::to_string(k) + ": alpha " + to_string(f.alpha(k)) + " beta " + to_string(f.beta(k)));
		require(f.alpha(k) == a && f.beta(k) == b, "recurrence mismatch at k=" + std::to_string(k));
		for (const auto& c : f.instantiate(k)) check_coherence(c);
		const Index na = a + shift - b, nb = b + shift - a;
		a = na;
		b = nb;
	}
	bool rejected = false;
	try {
		f.instantiate(-1);
	} catch (const Error&) {
		rejected = true;
	}
	require(rejected, "negative k accepted");
	return "alpha_0=" + to_string(f.alpha0) + " beta_0=" + to_string(f.beta0) + ", k=0..5 coherent";
}

// delta^2 vanishes with Koszul signs and doubles the cross term with paper signs.
std::string ac3()
{
	const auto t0 = Clock::now();
	test::RandomTerms gen(31337);
	for (int i = 0; i < 200; ++i) {
		Term t = gen.homogeneous(5);
		for (auto d : {DiffKind::delta, DiffKind::Delta}) {
			const Term twice =
			    apply_differential(d, apply_differential(d, t, SignMode::koszul), SignMode::koszul);
			require(twice.is_zero(), "koszul square nonzero on " + to_string(t));
		}
		const Monomial ab = gen.monomial(2, false);
		const Term a = Term::of(ab.factors[0]), b = Term::of(ab.factors[1]);
		for (auto d : {DiffKind::delta, DiffKind::Delta}) {
			const Term lhs = apply_differential(d, apply_differential(d, Term::of(ab)));
			const Term rhs = scale(2, multiply({apply_differential(d, a), apply_differential(d, b)}));
			require(lhs == rhs, "paper square of " + to_string(Term::of(ab)) + " is " + to_string(lhs));
		}
	}
	const double dt = seconds_since(t0);
	require(dt < 5.0, "took " + std::to_string(dt) + " s");
	return "200 random terms in " + std::to_string(static_cast<int>(dt * 1000)) + " ms";
}

std::string class_setup_text(const Index& picked, const std::array<Index, 4>& phis)
{
	auto idx = [](const Index& i) {
		return "(" + std::to_string(i.n) + "," + std::to_string(i.m) + "," + std::to_string(i.kappa) + ")";
	};
	std::string s = "set sign-mode paper;\n";
	s += "gen phi index " + idx(picked) + " flags [picked];\n";
	s += "gen eta index " + idx(picked) + " flags [picked];\n";
	for (int i = 0; i < 4; ++i)
		s += "gen Phi" + std::to_string(i + 1) + " index " + idx(phis[i]) + " flags [completion];\n";
	s += "ideal nonlocal2 d(phi);\nideal nonlocal2 d(eta);\n";
	s += "tuba T := tuba(phi, eta; Phi1, Phi2, Phi3, Phi4) by delta;\n";
	s += "class GV := kordo(phi; Phi1, Phi2, Phi3, Phi4);\n";
	return s;
}

VerificationReport cocycle_of(const Session& s)
{
	const ClassDecl& c = s.classes.at("GV");
	const Term cls = build_class(Term::of(c.phi), c.completions, s.config.d, s.config.verify());
	return verify_cocycle(cls, s.config.d, s.hypotheses, s.ideals, s.config.verify());
}

void require_cocycle_counts(const VerificationReport& r, const std::string& where)
{
	require(r.success, where + ": residual " + to_string(r.residual));
	require(r.count(Rule::ideal_deletion) == 1 && r.count(Rule::law_deletion) == 2 &&
	            r.count(Rule::hypothesis_cancellation) == 1 && r.count(Rule::survivor) == 0,
	        where + ": unexpected trace counts");
}

// The class is a cocycle on the shipped file and under random coherent re-indexings.
std::string ac4()
{
	const auto t0 = Clock::now();
	auto s = Session::load_file(path("data/cocycle.gda"));
	require_cocycle_counts(cocycle_of(*s), "shipped");
	auto u = Session::load_file(path("data/cocycle_unclosed.gda"));
	require(!cocycle_of(*u).success, "unclosed file verified");
	std::mt19937_64 rng(2718);
	std::uniform_int_distribution<int> v(-4, 4);
	auto rnd = [&] { return Index{v(rng), v(rng), v(rng)}; };
	for (int i = 0; i < 100; ++i) {
		const Index picked = rnd();
		const std::array<Index, 4> phis{rnd(), rnd(), rnd(), rnd()};
		auto r = Session::load_text(class_setup_text(picked, phis));
		require_cocycle_counts(cocycle_of(*r), "re-indexing " + std::to_string(i));
	}
	const double dt = seconds_since(t0);
	require(dt < 10.0, "took " + std::to_string(dt) + " s");
	return "shipped file and 100 re-indexings: 1 ideal, 2 law, 1 hypothesis step, " +
	       std::to_string(static_cast<int>(dt * 1000)) + " ms";
}

// Independence: a seven-summand primitive whose differential matches the class difference.
std::string ac5()
{
	const auto t0 = Clock::now();
	auto s = Session::load_file(path("data/cocycle.gda"));
	const ClassDecl& c = s->classes.at("GV");
	const Factor eta = make_factor(s->symbols.get("eta"));
	const VerifyConfig cfg = s->config.verify();
	const DiffKind d = s->config.d;
	auto r = verify_independence(c.phi, eta, c.completions, d, s->hypotheses, s->ideals, cfg);
	require(r.success, "independence failed: " + (r.failures.empty() ? std::string() : r.failures.front()));
	require(r.primitive && r.primitive->size() == 7, "primitive does not have 7 summands");

	Term expected = r.difference;
	for (const auto& g : r.cancelled) {
		require(s->hypotheses.match(g, d) != nullptr, "cancelled group is not a closure hypothesis: " + to_string(g));
		expected = add_heterogeneous(expected, g);
	}
	const Term dP = normalize(reduce(apply_differential(d, *r.primitive, cfg.sign, cfg.laws), s->ideals, cfg.laws), cfg.laws);
	require(dP == normalize(expected, cfg.laws), "d(P) differs from the difference modulo cancellations");

	std::size_t ablations = 0;
	const std::vector<std::string> names{"phi", "eta"};
	for (int mask = 1; mask < 8; ++mask) {
		const std::string id = "T:tuba[primitive](" + names[(mask >> 2) & 1] + "," + names[(mask >> 1) & 1] + "," +
		                       names[mask & 1] + ")";
		HypothesisSet fewer = s->hypotheses;
		require(fewer.remove(id), "missing hypothesis " + id);
		auto a = verify_independence(c.phi, eta, c.completions, d, fewer, s->ideals, cfg);
		require(!a.success, "ablating " + id + " still verifies");
		require(a.residual.size() == 1, "ablating " + id + " leaves " + std::to_string(a.residual.size()) + " terms");
		require(!a.failures.empty(), "ablating " + id + " reports no failure");
		++ablations;
	}
	const double dt = seconds_since(t0);
	require(dt < 10.0, "took " + std::to_string(dt) + " s");
	return "7-summand primitive, " + std::to_string(ablations) + " ablations each leave one cross term, " +
	       std::to_string(static_cast<int>(dt * 1000)) + " ms";
}

// Coherence equations agree with componentwise sums on random factor lists and derivation moves.
std::string ac6()
{
	std::mt19937_64 rng(4242);
	std::uniform_int_distribution<int> v(-5, 5), ov(0, 2), len(1, 5);
	std::size_t moves = 0;
	for (int trial = 0; trial < 500; ++trial) {
		SymbolRegistry reg;
		std::vector<Factor> fs;
		std::vector<Overlap> ovs;
		Index sum{0, 0, 0};
		const int l = len(rng);
		for (int i = 0; i < l; ++i) {
			const Index idx{v(rng), v(rng), v(rng)};
			const Overlap o{ov(rng), ov(rng)};
			fs.push_back(make_factor(reg.declare("x" + std::to_string(i), idx)));
			ovs.push_back(o);
			sum = sum + idx - Index{o.r, o.t, 0};
		}
		Condition c;
		c.rhs = Term::of(Monomial(fs, ovs));
		c.target = sum;
		for (const auto& e : coherence_constraints(c)) require(e.holds(), "trial " + std::to_string(trial) + ": " + e.text);
		check_coherence(c);
		Condition off = c;
		off.target.kappa += 1;
		bool rejected = false;
		try {
			check_coherence(off);
		} catch (const CoherenceViolation&) {
			rejected = true;
		}
		require(rejected, "perturbed target accepted on trial " + std::to_string(trial));

		const Monomial plain(fs);
		for (const auto& mv : factorization_moves(plain, reg)) {
			require(mv.replacement.index() == mv.resolved.effective_index(), "factorization move breaks coherence");
			++moves;
		}
	}
	return "500 random products, " + std::to_string(moves) + " factorization moves coherent";
}

std::size_t run_identities(const std::vector<ModelIdentity>& ids, const Model& m, int trials, std::uint64_t seed,
                           std::size_t& skipped)
{
	std::size_t passed = 0;
	for (const auto& id : ids) {
		auto r = check_model_identity(id, m, trials, seed);
		if (r.skipped) {
			++skipped;
			continue;
		}
		require(r.passed, id.name + " fails in the " + std::string(to_string(m.field())) + " model");
		++passed;
	}
	return passed;
}

// Symbolic expansions agree with the exterior-algebra model on random assignments.
std::string ac7()
{
	const auto t0 = Clock::now();
	constexpr int trials = 50;
	std::size_t passed = 0, skipped = 0, limitations = 0;
	for (auto sign : {SignMode::paper_literal, SignMode::koszul}) {
		const Model m = standard_model(sign == SignMode::koszul ? Field::rationals : Field::gf2);
		ConfigOverrides o;
		o.sign = sign;
		auto s3 = Session::load_file(path("data/orthogonality.gda"), o);
		for (const auto& c : s3->conditions)
			passed += run_identities(leibniz_identities(c.label, c.condition.rhs, DiffKind::delta, sign), m, trials, 7, skipped);
		test::RandomTerms gen(99);
		for (int i = 0; i < 50; ++i)
			passed += run_identities(leibniz_identities("random", gen.homogeneous(4), DiffKind::delta, sign), m, trials, i,
			                         skipped);
	}
	auto s = Session::load_file(path("data/cocycle.gda"));
	const Model m = standard_model(Field::gf2);
	const ClassDecl& c = s->classes.at("GV");
	const VerifyConfig cfg = s->config.verify();
	const Term cls = build_class(Term::of(c.phi), c.completions, DiffKind::delta, cfg);
	auto cocycle = verify_cocycle(cls, DiffKind::delta, s->hypotheses, s->ideals, cfg);
	auto oc = report_identities("cocycle", cocycle, cls, DiffKind::delta, cfg, m, trials, 5);
	passed += run_identities(oc.identities, m, trials, 5, skipped);
	limitations += oc.limitations.size();
	const Factor eta = make_factor(s->symbols.get("eta"));
	auto ind = verify_independence(c.phi, eta, c.completions, DiffKind::delta, s->hypotheses, s->ideals, cfg);
	require(ind.primitive.has_value(), "independence produced no primitive");
	auto oi = report_identities("independence", ind, *ind.primitive, DiffKind::delta, cfg, m, trials, 6);
	passed += run_identities(oi.identities, m, trials, 6, skipped);
	limitations += oi.limitations.size();
	require(passed > 0, "no identity was checked");
	const double dt = seconds_since(t0);
	require(dt < 10.0, "took " + std::to_string(dt) + " s");
	return std::to_string(passed) + " identities x " + std::to_string(trials) + " assignments, " +
	       std::to_string(skipped) + " skipped, " + std::to_string(limitations) + " unrealized deletions";
}

struct CliRun {
	int code;
	std::string out;
};

CliRun cli_run(const std::vector<std::string>& args)
{
	std::ostringstream out, err;
	int code = cli::run(args, out, err);
	return {code, out.str()};
}

// CLI: shipped files round-trip, exit codes follow the contract and JSON reports meet the schema.
std::string ac8()
{
	const std::string schema = test::read_text(path("data/schema/report.schema.json"));
	std::size_t validated = 0;
	auto validate = [&](const std::string& doc, const std::string& what) {
		auto errors = test::validate_json(doc, schema);
		require(errors.empty(), what + ": " + (errors.empty() ? std::string() : errors.front()));
		++validated;
	};
	for (const std::string f : {"orthogonality.gda", "cocycle.gda", "cocycle_unclosed.gda"}) {
		const std::string file = path("data/" + f);
		CliRun p = cli_run({"print", file});
		require(p.code == cli::success, "print " + f);
		require(dsl::parse(p.out) == dsl::parse(test::read_text(file)), f + " does not round-trip");
		CliRun c = cli_run({"check", file, "--report", "json"});
		require(c.code == cli::success, "check " + f);
		validate(c.out, "check " + f);
	}
	const std::string s3 = path("data/orthogonality.gda"), t2 = path("data/cocycle.gda"),
	                  un = path("data/cocycle_unclosed.gda");
	const std::vector<std::pair<std::vector<std::string>, int>> runs{
	    {{"derive", s3, "--start", "(00)"}, cli::success},
	    {{"derive", s3, "--start", "(I0I)"}, cli::success},
	    {{"verify-class", t2, "--class", "GV"}, cli::success},
	    {{"verify-independence", t2, "--class", "GV", "--eta", "eta"}, cli::success},
	    {{"model-check", t2, "--trials", "10"}, cli::success},
	    {{"verify-class", un, "--class", "GV"}, cli::verification_failure},
	    {{"verify-independence", t2, "--class", "GV", "--eta", "eta", "--without", "T:tuba[primitive](eta,eta,eta)"},
	     cli::verification_failure},
	    {{"check", "/nonexistent/input.gda"}, cli::internal_error},
	    {{"derive", s3, "--start", "(IIIII)"}, cli::internal_error},
	    {{"frobnicate"}, cli::internal_error},
	};
	for (auto [args, want] : runs) {
		std::string joined;
		for (const auto& a : args) joined += " " + a;
		CliRun r = cli_run(args);
		require(r.code == want, "gda" + joined + " exited " + std::to_string(r.code));
		if (args.size() > 1) {
			args.push_back("--report");
			args.push_back("json");
			CliRun j = cli_run(args);
			require(j.code == want, "gda" + joined + " --report json exited " + std::to_string(j.code));
			validate(j.out, "gda" + joined);
		}
	}
	return std::to_string(runs.size()) + " invocations, " + std::to_string(validated) + " JSON reports valid";
}

}  // namespace

int main()
{
	const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
	    {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
	    {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8},
	};
	int failed = 0;
	for (const auto& [id, run] : criteria) {
		std::string detail;
		bool ok = false;
		try {
			detail = run();
			ok = true;
		} catch (const Failure& f) {
			detail = f.why;
		} catch (const std::exception& e) {
			detail = std::string("exception: ") + e.what();
		}
		if (!ok) ++failed;
		std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << "  " << detail << std::endl;
	}
	return failed == 0 ? 0 : 1;
}
