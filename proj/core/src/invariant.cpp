#include "gda/invariant.hpp"

#include "gda/error.hpp"

#include <algorithm>

namespace gda {

std::string_view to_string(XiMode m) { return m == XiMode::sum_enriched ? "sum" : "pairs"; }

std::string_view to_string(Claim c)
{
	switch (c) {
	case Claim::closure: return "closure";
	case Claim::cocycle: return "cocycle";
	case Claim::independence: return "independence";
	}
	return "cocycle";
}

std::string_view to_string(Rule r)
{
	switch (r) {
	case Rule::law_deletion: return "law-deletion";
	case Rule::ideal_deletion: return "ideal-deletion";
	case Rule::hypothesis_cancellation: return "hypothesis-cancellation";
	case Rule::survivor: return "survivor";
	case Rule::primitive: return "primitive";
	}
	return "survivor";
}

std::size_t VerificationReport::count(Rule r) const
{
	return static_cast<std::size_t>(
	    std::count_if(trace.begin(), trace.end(), [r](const TraceStep& s) { return s.rule == r; }));
}

Monomial Completion::product() const
{
	std::vector<Factor> fs;
	for (std::size_t i = 0; i < picked.size(); ++i) {
		fs.push_back(completions[i]);
		fs.push_back(picked[i]);
	}
	fs.push_back(completions.back());
	return Monomial(std::move(fs));
}

Completion make_completion(std::vector<Factor> picked, std::vector<Factor> completions)
{
	if (completions.size() != picked.size() + 1)
		throw LayoutError("a completion of " + std::to_string(picked.size()) + " picked elements needs " +
		                  std::to_string(picked.size() + 1) + " completion factors, got " +
		                  std::to_string(completions.size()));
	for (const auto& f : completions)
		if (f.gen->role != Role::completion)
			throw LayoutError(to_string(f) + " does not carry the completion role");
	for (const auto& f : picked)
		if (f.gen->role == Role::completion)
			throw LayoutError(to_string(f) + " is a completion factor in a picked position");
	return Completion{std::move(picked), std::move(completions)};
}

std::set<std::size_t> completion_slots(const Monomial& m)
{
	std::set<std::size_t> out;
	for (std::size_t i = 0; i < m.arity(); ++i)
		if (m.factors[i].gen->role == Role::completion) out.insert(i);
	return out;
}

Term closure_sum(DiffKind d, const Term& t, const VerifyConfig& config)
{
	Term out;
	for (const auto& [m, c] : t) {
		Term part = apply_slot_differential(d, m, completion_slots(m), config.sign, config.laws);
		for (const auto& [pm, pc] : part) out.accumulate(pm, c * pc);
	}
	return normalize(out, config.laws);
}

void HypothesisSet::add(ClosureHypothesis h)
{
	if (find(h.id)) return;
	items_.push_back(std::move(h));
}

bool HypothesisSet::remove(const std::string& id)
{
	auto it = std::find_if(items_.begin(), items_.end(), [&](const ClosureHypothesis& h) { return h.id == id; });
	if (it == items_.end()) return false;
	items_.erase(it);
	return true;
}

const ClosureHypothesis* HypothesisSet::find(const std::string& id) const
{
	for (const auto& h : items_)
		if (h.id == id) return &h;
	return nullptr;
}

const ClosureHypothesis* HypothesisSet::match(const Term& combination, DiffKind d, Rational* scale_out) const
{
	if (combination.is_zero()) return nullptr;
	for (const auto& h : items_) {
		if (h.d != d || h.combination.size() != combination.size() || h.combination.is_zero()) continue;
		const Rational q = combination.begin()->second / h.combination.begin()->second;
		if (scale(q, h.combination) == combination) {
			if (scale_out) *scale_out = q;
			return &h;
		}
	}
	return nullptr;
}

std::string HypothesisSet::nearest_miss(const Term& combination, DiffKind d) const
{
	std::string best;
	std::size_t best_shared = 0;
	for (const auto& h : items_) {
		if (h.d != d) continue;
		std::size_t shared = 0;
		for (const auto& [m, c] : combination)
			if (h.combination.coefficient(m) != 0) ++shared;
		if (shared > best_shared) {
			best_shared = shared;
			best = h.id;
		}
	}
	return best;
}

VerificationReport check_closed(const Completion& c, DiffKind d, const IdealRegistry& ideals,
                                const VerifyConfig& config)
{
	VerificationReport r;
	r.claim = Claim::closure;
	r.subject = to_string(c.product()) + " by " + std::string(to_string(d));
	const Term raw = closure_sum(d, Term::of(c.product()), config);
	r.residual = reduce(raw, ideals, config.laws);
	for (const auto& [m, coeff] : raw)
		if (r.residual.coefficient(m) == 0) {
			auto hit = find_vanishing(m, ideals, config.laws);
			r.trace.push_back({Rule::ideal_deletion, hit ? describe(*hit, m) : "ideal", Term::of(m, coeff), {}});
		}
	for (const auto& [m, coeff] : r.residual) r.trace.push_back({Rule::survivor, "", Term::of(m, coeff), Term::of(m, coeff)});
	r.success = r.residual.is_zero();
	if (!r.success) r.failures.push_back("closure sum does not vanish: " + to_string(r.residual));
	return r;
}

ClosureHypothesis assume_closed(const Completion& c, DiffKind d, const IdealRegistry& ideals, std::string id,
                                const VerifyConfig& config)
{
	return {std::move(id), d, reduce(closure_sum(d, Term::of(c.product()), config), ideals, config.laws)};
}

namespace {

Term epsilon_slot(const Term& phi1, const Term& x, const VerifyConfig& config)
{
	return epsilon(config.epsilon, phi1, x);
}

Term assemble(const Term& slot_value, const Term& b, const Term& c, const Completions& phis, DiffKind d,
              const VerifyConfig& config)
{
	const Term p1 = Term::of(phis[0]);
	std::vector<Term> parts{epsilon_slot(p1, slot_value, config), Term::of(phis[1]),
	                        apply_differential(d, b, config.sign, config.laws), Term::of(phis[2]), c,
	                        Term::of(phis[3])};
	return normalize(multiply(parts), config.laws);
}

std::string law_detail(const Factor& raw, const DiffLaws& laws)
{
	for (std::size_t i = 0; i + 1 < raw.diffs.size(); ++i)
		if (raw.diffs[i] == raw.diffs[i + 1] && is_chain_cochain(raw.diffs[i], laws))
			return "chain-cochain law " + std::string(to_string(raw.diffs[i])) + " o " +
			       std::string(to_string(raw.diffs[i])) + " = 0 on " + to_string(raw);
	if (!raw.diffs.empty() && raw.gen->is_constant_for(raw.diffs.front()))
		return "constant generator " + raw.name() + " in " + to_string(raw);
	return "commutation of Delta with delta then the chain-cochain law on " + to_string(raw);
}

/// Leibniz expansion of d(subject) sorted into deletions, hypothesis cancellations and survivors.
struct Expansion {
	Term survivors;
	std::vector<Term> cancelled;
};

Expansion classify_expansion(DiffKind d, const Term& subject, const HypothesisSet& hyps, const IdealRegistry& ideals,
                             const VerifyConfig& config, VerificationReport& report)
{
	Expansion out;
	for (const auto& [m, coeff] : subject) {
		Term group;
		for (const auto& s : leibniz_summands(d, m, config.sign, config.laws)) {
			const Rational c = coeff * s.sign;
			if (s.annihilated) {
				report.trace.push_back(
				    {Rule::law_deletion, law_detail(s.monomial.factors[s.position], config.laws),
				     Term::of(s.monomial, c), {}});
				continue;
			}
			const Term normal = normalize(Term::of(s.monomial, c), config.laws);
			const Monomial& nm = normal.begin()->first;
			if (auto hit = find_vanishing(nm, ideals, config.laws)) {
				report.trace.push_back({Rule::ideal_deletion, describe(*hit, nm), normal, {}});
				continue;
			}
			if (m.factors[s.position].gen->role == Role::completion) {
				group.accumulate(nm, normal.begin()->second);
				continue;
			}
			out.survivors.accumulate(nm, normal.begin()->second);
		}
		if (group.is_zero()) continue;
		Rational q;
		if (const ClosureHypothesis* h = hyps.match(group, d, &q)) {
			report.trace.push_back({Rule::hypothesis_cancellation, h->id, group, {}});
			out.cancelled.push_back(group);
		} else {
			std::string miss = hyps.nearest_miss(group, d);
			if (!miss.empty() && report.nearest_miss.empty()) report.nearest_miss = miss;
			report.failures.push_back("no closure hypothesis matches " + to_string(group));
			for (const auto& [gm, gc] : group) out.survivors.accumulate(gm, gc);
		}
	}
	for (const auto& [m, c] : out.survivors) report.trace.push_back({Rule::survivor, "", Term::of(m, c), Term::of(m, c)});
	return out;
}

void require_nonlocal(const Factor& base, DiffKind d, const IdealRegistry& ideals, const DiffLaws& laws)
{
	const Factor df = push_diff(base, d);
	if (!ideals.is_member(IdealKind::nonlocal2, df, laws))
		throw HypothesisError(to_string(df) + " is not registered in I_nl(2)");
}

}  // namespace

Term class_product(const Term& a, const Term& b, const Term& c, const Completions& phis, DiffKind d,
                   const VerifyConfig& config)
{
	const Term dbar_d_a =
	    apply_differential(other(d), apply_differential(d, a, config.sign, config.laws), config.sign, config.laws);
	return assemble(dbar_d_a, b, c, phis, d, config);
}

Term primitive_product(const Term& a, const Term& b, const Term& c, const Completions& phis, DiffKind d,
                       const VerifyConfig& config)
{
	return assemble(apply_differential(other(d), a, config.sign, config.laws), b, c, phis, d, config);
}

Term build_class(const Term& phi, const Completions& phis, DiffKind d, const VerifyConfig& config)
{
	return class_product(phi, phi, phi, phis, d, config);
}

std::vector<Term> build_symmetrized_class(const Term& phi, const Completions& phis, std::span<const DiffKind> symm,
                                          const VerifyConfig& config)
{
	std::vector<Term> out;
	for (auto d : symm) out.push_back(build_class(phi, phis, d, config));
	return out;
}

TubaSet build_tuba_set(const Factor& phi, const Factor& psi, const Completions& phis, XiMode mode, DiffKind d,
                       const IdealRegistry& ideals, const VerifyConfig& config)
{
	require_nonlocal(phi, d, ideals, config.laws);
	require_nonlocal(psi, d, ideals, config.laws);

	TubaSet out;
	out.phi = phi;
	out.psi = psi;
	out.completions = phis;
	out.mode = mode;
	out.d = d;

	const Term tphi = Term::of(phi), tpsi = Term::of(psi);
	std::vector<std::pair<std::string, Term>> options;
	if (mode == XiMode::sum_enriched) {
		options = {{phi.name(), tphi}, {psi.name(), tpsi}, {phi.name() + "+" + psi.name(), add_heterogeneous(tphi, tpsi)}};
	} else {
		auto pair = [](const Factor& x, const Factor& y) { return "(" + x.name() + "," + y.name() + ")"; };
		options = {{pair(phi, phi), multiply({tphi, tphi})},
		           {pair(phi, psi), multiply({tphi, tpsi})},
		           {pair(psi, psi), multiply({tpsi, tpsi})}};
	}
	for (const char* form : {"primitive", "class"}) {
		const bool is_class = std::string_view(form) == "class";
		for (const auto& [n1, x1] : options)
			for (const auto& [n2, x2] : options)
				for (const auto& [n3, x3] : options) {
					Term product = is_class ? class_product(x1, x2, x3, phis, d, config)
					                        : primitive_product(x1, x2, x3, phis, d, config);
					ClosureHypothesis h;
					h.id = "tuba[" + std::string(form) + "](" + n1 + "," + n2 + "," + n3 + ")";
					h.d = d;
					h.combination = reduce(closure_sum(d, product, config), ideals, config.laws);
					out.conditions.push_back(std::move(h));
				}
	}
	return out;
}

void register_tuba(const TubaSet& tuba, HypothesisSet& hypotheses)
{
	for (const auto& h : tuba.conditions) {
		ClosureHypothesis copy = h;
		if (!tuba.name.empty()) copy.id = tuba.name + ":" + h.id;
		hypotheses.add(std::move(copy));
	}
}

VerificationReport verify_cocycle(const Term& cls, DiffKind d, const HypothesisSet& hypotheses,
                                  const IdealRegistry& ideals, const VerifyConfig& config)
{
	VerificationReport r;
	r.claim = Claim::cocycle;
	r.subject = to_string(cls) + " by " + std::string(to_string(d));
	Expansion e = classify_expansion(d, cls, hypotheses, ideals, config, r);
	r.residual = normalize(e.survivors, config.laws);
	r.cancelled = std::move(e.cancelled);
	r.success = r.residual.is_zero();
	if (!r.success && r.failures.empty()) r.failures.push_back("residual " + to_string(r.residual));
	if (r.success) r.failures.clear();
	return r;
}

VerificationReport verify_independence(const Factor& phi, const std::optional<Factor>& eta, const Completions& phis,
                                       DiffKind d, const HypothesisSet& hypotheses, const IdealRegistry& ideals,
                                       const VerifyConfig& config)
{
	VerificationReport r;
	r.claim = Claim::independence;
	r.subject = phi.name() + " -> " + phi.name() + " + " + (eta ? eta->name() : std::string("0"));
	require_nonlocal(phi, d, ideals, config.laws);
	if (!eta) {
		r.primitive = Term{};
		r.success = true;
		return r;
	}
	require_nonlocal(*eta, d, ideals, config.laws);

	const Term tphi = Term::of(phi), teta = Term::of(*eta);
	const Term sum = add_heterogeneous(tphi, teta);
	r.difference = add_heterogeneous(build_class(sum, phis, d, config), scale(-1, build_class(tphi, phis, d, config)));

	const std::array<const Term*, 2> base{&tphi, &teta};
	Term crosses;
	Term primitive;
	Term unexplained;
	for (int mask = 1; mask < 8; ++mask) {
		const Term& a = *base[(mask >> 2) & 1];
		const Term& b = *base[(mask >> 1) & 1];
		const Term& c = *base[mask & 1];
		const Term cross = class_product(a, b, c, phis, d, config);
		crosses = add_heterogeneous(crosses, cross);
		if (config.epsilon == EpsilonMode::drop) {
			r.failures.push_back("epsilon drop mode leaves no eps-slot differential to strip for " + to_string(cross));
			unexplained = add_heterogeneous(unexplained, cross);
			continue;
		}
		const Term candidate = primitive_product(a, b, c, phis, d, config);
		VerificationReport sub;
		Expansion e = classify_expansion(d, candidate, hypotheses, ideals, config, sub);
		const Term survivors = normalize(e.survivors, config.laws);
		bool ok = !cross.is_zero() && survivors.size() == cross.size() && !survivors.is_zero();
		Rational q;
		if (ok) {
			q = survivors.begin()->second / cross.begin()->second;
			ok = scale(q, cross) == survivors;
		}
		if (!ok) {
			if (!sub.nearest_miss.empty() && r.nearest_miss.empty()) r.nearest_miss = sub.nearest_miss;
			for (auto& s : sub.trace)
				if (s.rule != Rule::survivor) r.trace.push_back(std::move(s));
			r.failures.push_back("cross term " + to_string(cross) + " has no verifiable primitive");
			unexplained = add_heterogeneous(unexplained, cross);
			continue;
		}
		const Term piece = scale(1 / q, candidate);
		for (auto& s : sub.trace)
			if (s.rule != Rule::survivor) r.trace.push_back({s.rule, s.detail, scale(1 / q, s.before), s.after});
		r.trace.push_back({Rule::primitive, "d of " + to_string(piece) + " reproduces the cross term", piece, cross});
		primitive = add_heterogeneous(primitive, piece);
		for (const auto& g : e.cancelled) r.cancelled.push_back(scale(1 / q, g));
	}
	if (normalize(crosses, config.laws) != normalize(r.difference, config.laws))
		r.failures.push_back("multilinear expansion does not reproduce class(phi+eta) - class(phi)");
	r.residual = normalize(unexplained, config.laws);
	r.primitive = primitive;
	r.success = r.failures.empty() && r.residual.is_zero();
	return r;
}

}  // namespace gda
