#include "gda/session.hpp"

#include "gda/error.hpp"

#include <fstream>
#include <sstream>

namespace gda {

std::string read_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in) throw Error("cannot read " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

namespace {

bool parse_bool(const std::string& v, const dsl::SourcePos& at)
{
	if (v == "true") return true;
	if (v == "false") return false;
	throw ParseError(at.line, at.column, "expected true or false, got '" + v + "'");
}

void apply_setting(SessionConfig& c, const dsl::SetStmt& s, const dsl::SourcePos& at)
{
	auto bad = [&] { throw ParseError(at.line, at.column, "invalid value '" + s.value + "' for " + s.key); };
	if (s.key == "sign-mode") {
		if (s.value == "paper")
			c.sign = SignMode::paper_literal;
		else if (s.value == "koszul")
			c.sign = SignMode::koszul;
		else
			bad();
	} else if (s.key == "epsilon-mode") {
		if (s.value == "pair")
			c.epsilon = EpsilonMode::pair;
		else if (s.value == "drop")
			c.epsilon = EpsilonMode::drop;
		else
			bad();
	} else if (s.key == "xi-mode") {
		if (s.value == "sum")
			c.xi = XiMode::sum_enriched;
		else if (s.value == "pairs")
			c.xi = XiMode::ordered_pairs;
		else
			bad();
	} else if (s.key == "depth") {
		try {
			c.depth = std::stoi(s.value);
		} catch (const std::exception&) {
			bad();
		}
		if (c.depth < 1) bad();
	} else if (s.key == "d") {
		if (s.value == "delta")
			c.d = DiffKind::delta;
		else if (s.value == "Delta")
			c.d = DiffKind::Delta;
		else
			bad();
	} else if (s.key == "Delta-chain") {
		c.laws.Delta_chain_cochain = parse_bool(s.value, at);
	} else if (s.key == "Delta-commutes") {
		c.laws.Delta_commutes = parse_bool(s.value, at);
	} else if (s.key == "m-coherence") {
		if (s.value == "standard")
			c.coherence.literal_m = false;
		else if (s.value == "literal")
			c.coherence.literal_m = true;
		else
			bad();
	} else {
		throw ParseError(at.line, at.column, "unknown setting '" + s.key + "'");
	}
}

void apply_bound(IndexBounds& b, const dsl::BoundStmt& s)
{
	auto& lo = s.component == "n" ? b.n_min : s.component == "m" ? b.m_min : b.kappa_min;
	auto& hi = s.component == "n" ? b.n_max : s.component == "m" ? b.m_max : b.kappa_max;
	(s.op == ">=" ? lo : hi) = s.value;
}

GeneratorSymbol make_symbol(const dsl::GenStmt& g, const dsl::SourcePos& at)
{
	GeneratorSymbol s;
	s.name = g.name;
	s.index = g.index;
	for (const auto& f : g.flags) {
		if (f == "picked")
			s.role = Role::picked;
		else if (f == "completion")
			s.role = Role::completion;
		else if (f == "plain")
			s.role = Role::plain;
		else if (f == "nonlocal2")
			s.flags.set(IdealFlag::nonlocal2);
		else if (f == "local2")
			s.flags.set(IdealFlag::local2);
		else if (f == "square2")
			s.flags.set(IdealFlag::square2);
		else if (f == "const")
			s.constant_for = 3;
		else if (f == "const-delta")
			s.constant_for |= 1;
		else if (f == "const-Delta")
			s.constant_for |= 2;
		else
			throw ParseError(at.line, at.column, "unknown flag '" + f + "'");
	}
	return s;
}

class Elaborator {
public:
	Elaborator(Session& s) : s_(s) {}

	void run(const ConfigOverrides& o)
	{
		const auto& d = s_.decl;
		for (std::size_t i = 0; i < d.statements.size(); ++i) {
			const auto& at = pos(i);
			if (auto* set = std::get_if<dsl::SetStmt>(&d.statements[i])) apply_setting(s_.config, *set, at);
			if (auto* b = std::get_if<dsl::BoundStmt>(&d.statements[i])) apply_bound(s_.config.coherence.bounds, *b);
		}
		if (o.sign) s_.config.sign = *o.sign;
		if (o.epsilon) s_.config.epsilon = *o.epsilon;
		if (o.xi) s_.config.xi = *o.xi;
		if (o.depth) s_.config.depth = *o.depth;
		if (o.literal_m) s_.config.coherence.literal_m = *o.literal_m;

		for (std::size_t i = 0; i < d.statements.size(); ++i) {
			at_ = pos(i);
			try {
				std::visit([this](const auto& st) { handle(st); }, d.statements[i]);
			} catch (const ParseError&) {
				throw;
			} catch (const CoherenceViolation& e) {
				throw IncoherentDeclaration(at_.line, at_.column, std::string("coherence failure: ") + e.what());
			} catch (const Error& e) {
				fail(e.what());
			}
		}
	}

private:
	dsl::SourcePos pos(std::size_t i) const
	{
		return i < s_.decl.positions.size() ? s_.decl.positions[i] : dsl::SourcePos{};
	}

	[[noreturn]] void fail(const std::string& msg) const { throw ParseError(at_.line, at_.column, msg); }

	SymbolPtr symbol(const std::string& name) const
	{
		auto s = s_.symbols.find(name);
		if (!s) fail("unknown generator '" + name + "'");
		return s;
	}

	Factor factor(const dsl::FactorExpr& f) const { return dsl::to_factor(f, s_.resolver()); }

	void handle(const dsl::SetStmt&) {}
	void handle(const dsl::BoundStmt&) {}

	void handle(const dsl::GenStmt& g)
	{
		auto sym = s_.symbols.declare(make_symbol(g, at_));
		const Factor f = make_factor(sym);
		if (sym->flags.has(IdealFlag::nonlocal2)) s_.ideals.register_member(IdealKind::nonlocal2, f, s_.config.laws);
		if (sym->flags.has(IdealFlag::local2)) s_.ideals.register_member(IdealKind::local2, f, s_.config.laws);
		if (sym->flags.has(IdealFlag::square2)) s_.ideals.register_member(IdealKind::square2, f, s_.config.laws);
		s_.config.coherence.bounds.enforce(sym->index, "generator " + sym->name);
	}

	void handle(const dsl::IdealStmt& i) { s_.ideals.register_member(i.kind, factor(i.pattern), s_.config.laws); }

	void handle(const dsl::ConditionStmt& c)
	{
		const auto& cfg = s_.config.coherence;
		Term lhs = normalize(dsl::to_term(c.lhs, s_.resolver(), cfg), s_.config.laws);
		Term rhs = normalize(dsl::to_term(c.rhs, s_.resolver(), cfg), s_.config.laws);
		Condition cond = make_condition(std::move(lhs), std::move(rhs), cfg);
		const std::string shape = pattern_label(cond);
		if (!shape.empty() && shape != c.label)
			fail("label " + c.label + " does not match the product pattern " + shape);
		cond.label = c.label;
		try {
			check_coherence(cond, cfg);
		} catch (const CoherenceViolation& e) {
			throw IncoherentDeclaration(at_.line, at_.column, std::string("coherence failure: ") + e.what());
		}
		for (const auto& existing : s_.conditions)
			if (existing.label == c.label) fail("condition " + c.label + " declared twice");
		s_.conditions.push_back({c.label, std::move(cond), at_});
	}

	void handle(const dsl::CompletionStmt& c)
	{
		if (s_.completions.count(c.name)) fail("completion " + c.name + " declared twice");
		std::vector<Factor> picked, phis;
		for (const auto& f : c.picked) picked.push_back(factor(f));
		for (const auto& f : c.completions) phis.push_back(factor(f));
		s_.completions.emplace(c.name, make_completion(std::move(picked), std::move(phis)));
	}

	void handle(const dsl::ClosedStmt& c)
	{
		auto it = s_.completions.find(c.completion);
		if (it == s_.completions.end()) fail("unknown completion '" + c.completion + "'");
		s_.hypotheses.add(assume_closed(it->second, c.d, s_.ideals, "closed:" + c.completion + ":" +
		                                std::string(dsl::diff_keyword(c.d)), s_.config.verify()));
		s_.closed.push_back(c.completion);
	}

	Completions completions(const std::array<std::string, 4>& names) const
	{
		Completions out{make_factor(symbol(names[0])), make_factor(symbol(names[1])), make_factor(symbol(names[2])),
		                make_factor(symbol(names[3]))};
		for (const auto& f : out)
			if (f.gen->role != Role::completion) fail(f.name() + " does not carry the completion role");
		return out;
	}

	void handle(const dsl::TubaStmt& t)
	{
		if (s_.tubas.count(t.name)) fail("tuba set " + t.name + " declared twice");
		TubaSet set = build_tuba_set(make_factor(symbol(t.phi)), make_factor(symbol(t.psi)), completions(t.completions),
		                             s_.config.xi, t.d, s_.ideals, s_.config.verify());
		set.name = t.name;
		register_tuba(set, s_.hypotheses);
		s_.tubas.emplace(t.name, std::move(set));
	}

	void handle(const dsl::ClassStmt& c)
	{
		if (s_.classes.count(c.name)) fail("class " + c.name + " declared twice");
		ClassDecl decl{c.name, make_factor(symbol(c.phi)), completions(c.completions), c.symm};
		if (decl.symm.empty()) decl.symm.push_back(s_.config.d);
		s_.classes.emplace(c.name, std::move(decl));
	}

	Session& s_;
	dsl::SourcePos at_;
};

}  // namespace

std::unique_ptr<Session> Session::load(const dsl::SessionDecl& decl, const ConfigOverrides& overrides)
{
	auto s = std::make_unique<Session>();
	s->decl = decl;
	Elaborator(*s).run(overrides);
	return s;
}

std::unique_ptr<Session> Session::load_text(std::string_view text, const ConfigOverrides& overrides)
{
	return load(dsl::parse(text), overrides);
}

std::unique_ptr<Session> Session::load_file(const std::string& path, const ConfigOverrides& overrides)
{
	return load_text(read_file(path), overrides);
}

const NamedCondition* Session::find_condition(const std::string& label) const
{
	for (const auto& c : conditions)
		if (c.label == label) return &c;
	const std::string alt = equivalent_label(label);
	if (alt != label)
		for (const auto& c : conditions)
			if (c.label == alt) return &c;
	return nullptr;
}

dsl::Resolver Session::resolver() const
{
	return [this](const std::string& name) -> SymbolPtr {
		auto s = symbols.find(name);
		if (!s) throw Error("unknown generator '" + name + "'");
		return s;
	};
}

Condition Session::parse_condition(std::string_view text) const
{
	auto [l, r] = dsl::parse_equation(text, true);
	auto holders = std::make_shared<std::map<std::string, SymbolPtr>>();
	dsl::Resolver resolve = [this, holders](const std::string& name) -> SymbolPtr {
		if (!name.empty() && name.front() == '?') {
			auto& slot = (*holders)[name];
			if (!slot) {
				GeneratorSymbol g;
				g.name = name;
				g.fresh = true;
				slot = std::make_shared<const GeneratorSymbol>(std::move(g));
			}
			return slot;
		}
		auto s = symbols.find(name);
		if (!s) throw Error("unknown generator '" + name + "'");
		return s;
	};
	Condition c;
	c.lhs = normalize(dsl::to_term(l, resolve, config.coherence, false), config.laws);
	c.rhs = normalize(dsl::to_term(r, resolve, config.coherence, false), config.laws);
	c.label = pattern_label(c);
	return c;
}

}  // namespace gda
