#pragma once

#include "gda/differential.hpp"
#include "gda/ideal.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gda {

/// sum_enriched: each xi slot ranges over {phi, psi, phi+psi}.
/// ordered_pairs: each xi slot ranges over the products {(phi,phi), (phi,psi), (psi,psi)}.
enum class XiMode { sum_enriched, ordered_pairs };

std::string_view to_string(XiMode m);

struct VerifyConfig {
	SignMode sign = SignMode::paper_literal;
	EpsilonMode epsilon = EpsilonMode::pair;
	DiffLaws laws;
	CoherenceConfig coherence;
};

/// Interleaved layout (Phi_1, phi_1, Phi_2, ..., phi_p, Phi_{p+1}).
struct Completion {
	std::vector<Factor> picked;
	std::vector<Factor> completions;

	std::size_t p() const { return picked.size(); }
	Monomial product() const;
};

/// Throws LayoutError unless |completions| = |picked| + 1 and the roles are completion / non-completion.
Completion make_completion(std::vector<Factor> picked, std::vector<Factor> completions);

/// Positions of factors whose generator has the completion role.
std::set<std::size_t> completion_slots(const Monomial& m);

/// sum_j d_j applied to every product of `t`, where d_j acts on completion factors only.
Term closure_sum(DiffKind d, const Term& t, const VerifyConfig& config);

/// A vanishing combination sum_j d_j(...) = 0 available to the matcher.
struct ClosureHypothesis {
	std::string id;
	DiffKind d = DiffKind::delta;
	Term combination;  // reduced and normalized
};

class HypothesisSet {
public:
	void add(ClosureHypothesis h);
	bool remove(const std::string& id);
	const ClosureHypothesis* find(const std::string& id) const;
	/// Hypothesis whose combination equals `combination` up to a nonzero scalar.
	const ClosureHypothesis* match(const Term& combination, DiffKind d, Rational* scale = nullptr) const;
	/// Id of the hypothesis sharing the most products with `combination`, empty if none shares any.
	std::string nearest_miss(const Term& combination, DiffKind d) const;

	std::size_t size() const { return items_.size(); }
	const std::vector<ClosureHypothesis>& items() const { return items_; }

private:
	std::vector<ClosureHypothesis> items_;
};

enum class Claim { closure, cocycle, independence };
enum class Rule { law_deletion, ideal_deletion, hypothesis_cancellation, survivor, primitive };

std::string_view to_string(Claim c);
std::string_view to_string(Rule r);

struct TraceStep {
	Rule rule;
	std::string detail;
	Term before;
	Term after;
};

struct VerificationReport {
	Claim claim = Claim::cocycle;
	bool success = false;
	std::string subject;  // what was verified, e.g. the class name and differential
	Term residual;
	std::vector<TraceStep> trace;
	std::optional<Term> primitive;
	std::vector<std::string> failures;
	std::string nearest_miss;
	/// Hypothesis combinations consumed by cancellations.
	std::vector<Term> cancelled;
	/// class(phi+eta) - class(phi) for independence runs.
	Term difference;

	std::size_t count(Rule r) const;
};

VerificationReport check_closed(const Completion& c, DiffKind d, const IdealRegistry& ideals,
                                const VerifyConfig& config = {});
/// Hypothesis form of the closure condition, for registration instead of checking.
ClosureHypothesis assume_closed(const Completion& c, DiffKind d, const IdealRegistry& ideals, std::string id,
                                const VerifyConfig& config = {});

using Completions = std::array<Factor, 4>;

/// (eps(Phi1, dbar d a), Phi2, d b, Phi3, c, Phi4) with dbar the other differential.
Term class_product(const Term& a, const Term& b, const Term& c, const Completions& phis, DiffKind d,
                   const VerifyConfig& config);
/// (eps(Phi1, dbar a), Phi2, d b, Phi3, c, Phi4): the class product with the eps-slot differential stripped.
Term primitive_product(const Term& a, const Term& b, const Term& c, const Completions& phis, DiffKind d,
                       const VerifyConfig& config);

Term build_class(const Term& phi, const Completions& phis, DiffKind d, const VerifyConfig& config = {});
/// One class per differential of the Symm_J enumeration.
std::vector<Term> build_symmetrized_class(const Term& phi, const Completions& phis, std::span<const DiffKind> symm,
                                          const VerifyConfig& config = {});

struct TubaSet {
	std::string name;
	Factor phi;
	Factor psi;
	Completions completions;
	XiMode mode = XiMode::sum_enriched;
	DiffKind d = DiffKind::delta;
	/// Every xi assignment in primitive form (eps slot dbar xi) and in class form (eps slot dbar d xi).
	std::vector<ClosureHypothesis> conditions;
};

/// Throws HypothesisError unless d(phi) and d(psi) belong to I_nl(2).
TubaSet build_tuba_set(const Factor& phi, const Factor& psi, const Completions& phis, XiMode mode, DiffKind d,
                       const IdealRegistry& ideals, const VerifyConfig& config = {});
void register_tuba(const TubaSet& tuba, HypothesisSet& hypotheses);

VerificationReport verify_cocycle(const Term& cls, DiffKind d, const HypothesisSet& hypotheses,
                                  const IdealRegistry& ideals, const VerifyConfig& config = {});

/// Checks class(phi+eta) - class(phi) = d(P) modulo the closure hypotheses and reconstructs P.
/// A missing eta stands for eta = 0.
VerificationReport verify_independence(const Factor& phi, const std::optional<Factor>& eta, const Completions& phis,
                                       DiffKind d, const HypothesisSet& hypotheses, const IdealRegistry& ideals,
                                       const VerifyConfig& config = {});

}  // namespace gda
