#include "gda/oracle.hpp"

#include "gda/error.hpp"

#include <array>
#include <random>

namespace gda {

IdentityResult check_model_identity(const ModelIdentity& id, const Model& model, int trials, std::uint64_t seed)
{
	IdentityResult r;
	r.name = id.name;
	const std::array<Term, 2> both{id.lhs, id.rhs};
	const auto symbols = generators_of(both);
	std::mt19937_64 rng(seed);
	try {
		for (auto d : id.model_diffs)
			if (!model.has(d)) throw ModelError("the model has no " + std::string(to_string(d)) + " derivation");
		for (int i = 0; i < trials; ++i) {
			const Assignment a = random_assignment(model, symbols, rng);
			Element rhs = evaluate(id.rhs, model, a);
			for (auto d : id.model_diffs) rhs = model.apply(d, rhs);
			const Element lhs = evaluate(id.lhs, model, a);
			++r.trials;
			if (lhs != rhs) {
				r.note = "trial " + std::to_string(i) + ": " + to_string(lhs) + " != " + to_string(rhs);
				return r;
			}
		}
	} catch (const ModelError& e) {
		r.skipped = true;
		r.note = e.what();
		return r;
	}
	r.passed = true;
	return r;
}

std::vector<ModelIdentity> leibniz_identities(const std::string& name, const Term& t, DiffKind d, SignMode sign,
                                              const DiffLaws& laws)
{
	const Term once = apply_differential(d, t, sign, laws);
	const Term twice = apply_differential(d, once, sign, laws);
	const std::string k(to_string(d));
	return {{name + ": " + k + " by Leibniz", once, t, {d}}, {name + ": " + k + " twice", twice, t, {d, d}}};
}

OracleCheck report_identities(const std::string& name, const VerificationReport& report, const Term& subject,
                              DiffKind d, const VerifyConfig& config, const Model& model, int trials,
                              std::uint64_t seed)
{
	OracleCheck out;
	Term rhs;
	if (report.claim == Claim::independence)
		rhs = add_heterogeneous(report.difference, scale(-1, report.residual));
	else
		rhs = report.residual;
	for (const auto& g : report.cancelled) rhs = add_heterogeneous(rhs, g);

	std::size_t realized = 0;
	for (const auto& s : report.trace) {
		if (s.rule != Rule::ideal_deletion) continue;
		const IdentityResult vanish = check_model_identity({s.detail, s.before, {}, {}}, model, trials, seed);
		if (vanish.passed) {
			++realized;
			continue;
		}
		rhs = add_heterogeneous(rhs, s.before);
		out.limitations.push_back("ideal deletion not realized by the model: " + s.detail);
	}
	const Term lhs = apply_differential(d, subject, config.sign, config.laws);
	out.identities.push_back({name + ": expansion with " + std::to_string(realized) + " realized ideal deletions",
	                          lhs, normalize(rhs, config.laws), {}});
	return out;
}

}  // namespace gda
