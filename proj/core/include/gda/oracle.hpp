#pragma once

#include "gda/invariant.hpp"
#include "gda/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gda {

/// evaluate(lhs) against the model value of rhs after applying `model_diffs` (innermost first).
struct ModelIdentity {
	std::string name;
	Term lhs;
	Term rhs;
	std::vector<DiffKind> model_diffs;
};

struct IdentityResult {
	std::string name;
	bool passed = false;
	bool skipped = false;  // the model lacks a derivation the identity needs
	int trials = 0;
	std::string note;
};

IdentityResult check_model_identity(const ModelIdentity& id, const Model& model, int trials, std::uint64_t seed);

/// d(t) and d(d(t)) computed symbolically against the model derivation.
std::vector<ModelIdentity> leibniz_identities(const std::string& name, const Term& t, DiffKind d, SignMode sign,
                                              const DiffLaws& laws = {});

struct OracleCheck {
	std::vector<ModelIdentity> identities;
	/// Deletions the model does not reproduce; kept on the right side of the expansion identity.
	std::vector<std::string> limitations;
};

/// Expansion identity behind a cocycle or independence report: d(subject) equals the cancelled hypothesis
/// groups, the residual part and every ideal deletion the model does not realize.
OracleCheck report_identities(const std::string& name, const VerificationReport& report, const Term& subject,
                              DiffKind d, const VerifyConfig& config, const Model& model, int trials,
                              std::uint64_t seed);

}  // namespace gda
