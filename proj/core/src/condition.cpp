#include "gda/condition.hpp"

#include "gda/error.hpp"

#include <algorithm>
#include <numeric>

namespace gda {

ChoiceVector ChoiceVector::parse(std::string_view text)
{
	if (text.size() < 2 || text.front() != '(' || text.back() != ')')
		throw Error("choice vector must be written like (I0I): " + std::string(text));
	std::vector<bool> entries;
	for (char c : text.substr(1, text.size() - 2)) {
		if (c == 'I' || c == '1')
			entries.push_back(true);
		else if (c == '0' || c == 'O')
			entries.push_back(false);
		else
			throw Error("invalid choice entry '" + std::string(1, c) + "' in " + std::string(text));
	}
	return ChoiceVector(std::move(entries));
}

std::string ChoiceVector::label() const
{
	std::string s = "(";
	for (bool e : entries_) s += e ? 'I' : '0';
	return s + ")";
}

std::vector<ChoiceVector> enumerate_choices(std::size_t l)
{
	std::vector<ChoiceVector> out;
	for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
		std::vector<bool> e(l);
		for (std::size_t i = 0; i < l; ++i) e[i] = (mask >> (l - 1 - i)) & 1u;
		out.emplace_back(std::move(e));
	}
	return out;
}

std::string_view to_string(ConditionKind k) { return k == ConditionKind::differential ? "differential" : "orthogonality"; }

Condition make_condition(const ChoiceVector& J, const std::optional<Term>& gamma, std::span<const Term> phis,
                         DiffKind d, const DiffLaws& laws)
{
	if (phis.size() != J.size())
		throw ArityError("choice vector " + J.label() + " has " + std::to_string(J.size()) + " entries but " +
		                 std::to_string(phis.size()) + " factors were given");
	if (phis.empty()) throw ArityError("condition without factors");
	std::vector<Term> parts;
	for (std::size_t i = 0; i < phis.size(); ++i)
		parts.push_back(J[i] ? apply_differential(d, phis[i], SignMode::paper_literal, laws) : phis[i]);
	Condition c;
	c.label = J.label();
	c.rhs = normalize(multiply(parts), laws);
	if (gamma && !gamma->is_zero()) {
		c.lhs = apply_differential(d, *gamma, SignMode::paper_literal, laws);
		c.target = shift(d, *gamma->index());
	} else if (auto i = c.rhs.index()) {
		c.target = *i;
	}
	return c;
}

Condition make_condition(Term lhs, Term rhs, const CoherenceConfig& config)
{
	Condition c;
	c.lhs = std::move(lhs);
	c.rhs = std::move(rhs);
	if (auto i = c.lhs.index(config))
		c.target = *i;
	else if (auto j = c.rhs.index(config))
		c.target = *j;
	c.label = pattern_label(c);
	return c;
}

std::string pattern_label(const Monomial& m)
{
	std::string s = "(";
	for (const auto& f : m.factors) s += f.differentiated() ? 'I' : '0';
	return s + ")";
}

std::string pattern_label(const Condition& c)
{
	if (c.rhs.size() != 1) return {};
	return pattern_label(c.rhs.begin()->first);
}

std::string equivalent_label(const std::string& label)
{
	if (label == "(I00)") return "(I0)";
	if (label == "(00I)") return "(0I)";
	return label;
}

namespace {

std::string signed_term(std::int64_t v) { return v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v); }

void emit_equations(const Monomial& m, const Index& target, const CoherenceConfig& config,
                    std::vector<CoherenceEquation>& out)
{
	std::string tn, tm, tk;
	std::int64_t sn = 0, sm = 0, sk = 0;
	for (std::size_t j = 0; j < m.arity(); ++j) {
		const Index i = m.factors[j].effective_index();
		const Overlap o = m.overlaps[j];
		const std::int64_t mj = config.literal_m ? i.n : i.m;
		auto piece = [](std::int64_t v, std::int64_t sub) {
			if (sub == 0) return signed_term(v);
			return "(" + std::to_string(v) + " - " + std::to_string(sub) + ")";
		};
		const std::string sep = j ? " + " : "";
		tn += sep + piece(i.n, o.r);
		tm += sep + piece(mj, o.t);
		tk += sep + signed_term(i.kappa);
		sn += i.n - o.r;
		sm += mj - o.t;
		sk += i.kappa;
	}
	out.push_back({'n', target.n, sn, "n: " + std::to_string(target.n) + " = " + tn});
	out.push_back({'m', target.m, sm, "m: " + std::to_string(target.m) + " = " + tm});
	out.push_back({'k', target.kappa, sk, "kappa: " + std::to_string(target.kappa) + " = " + tk});
}

}  // namespace

std::vector<CoherenceEquation> coherence_constraints(const Condition& c, const CoherenceConfig& config)
{
	std::vector<CoherenceEquation> out;
	for (const auto& [m, coeff] : c.rhs) emit_equations(m, c.target, config, out);
	return out;
}

void check_coherence(const Condition& c, const CoherenceConfig& config)
{
	config.bounds.enforce(c.target, "condition index");
	for (const auto& [m, coeff] : c.lhs) {
		Index i = m.index_unchecked(config);
		if (i != c.target)
			throw CoherenceViolation("left side " + to_string(m) + " has index " + to_string(i) + ", expected " +
			                         to_string(c.target));
	}
	for (const auto& [m, coeff] : c.rhs)
		for (const auto& f : m.factors) config.bounds.enforce(f.effective_index(), to_string(f));
	for (const auto& eq : coherence_constraints(c, config))
		if (!eq.holds())
			throw CoherenceViolation("failing equation " + eq.text + " (sum is " + std::to_string(eq.actual) +
			                         ") in " + to_string(c));
}

Term monic(const Term& t)
{
	if (t.is_zero()) return t;
	return scale(1 / t.begin()->second, t);
}

std::string to_string(const Condition& c)
{
	const Term rhs = c.lhs.is_zero() ? monic(c.rhs) : c.rhs;
	return to_string(c.lhs) + " = " + to_string(rhs);
}

namespace {

void collect_fresh(const Term& t, std::vector<SymbolPtr>& out)
{
	for (const auto& [m, c] : t)
		for (const auto& f : m.factors)
			if (f.gen->fresh && std::none_of(out.begin(), out.end(), [&](const SymbolPtr& s) { return s->name == f.name(); }))
				out.push_back(f.gen);
}

}  // namespace

std::string alpha_canonical(const Condition& c)
{
	std::vector<SymbolPtr> fresh;
	collect_fresh(c.lhs, fresh);
	collect_fresh(c.rhs, fresh);
	if (fresh.empty()) return to_string(c);

	std::vector<SymbolPtr> holders;
	for (std::size_t i = 0; i < fresh.size(); ++i) {
		GeneratorSymbol g;
		g.name = "?" + std::to_string(i + 1);
		g.fresh = true;
		holders.push_back(std::make_shared<const GeneratorSymbol>(std::move(g)));
	}
	std::vector<std::size_t> perm(fresh.size());
	std::iota(perm.begin(), perm.end(), 0);
	std::string best;
	bool first = true;
	// Beyond six fresh symbols only the first-appearance assignment is tried.
	const bool exhaustive = fresh.size() <= 6;
	do {
		std::map<std::string, SymbolPtr> mapping;
		for (std::size_t i = 0; i < fresh.size(); ++i) mapping[fresh[i]->name] = holders[perm[i]];
		Condition r = c;
		r.lhs = rename(c.lhs, mapping);
		r.rhs = rename(c.rhs, mapping);
		std::string s = to_string(r);
		if (first || s < best) best = std::move(s);
		first = false;
	} while (exhaustive && std::next_permutation(perm.begin(), perm.end()));
	return best;
}

ConditionSet symmetrize(std::span<const FamilyMember> family, DiffKind d, const DiffLaws& laws)
{
	ConditionSet out;
	for (const auto& member : family) {
		Condition c = make_condition(member.J, member.gamma, member.phis, d, laws);
		out.try_emplace(to_string(c), std::move(c));
	}
	return out;
}

}  // namespace gda
