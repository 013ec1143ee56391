#pragma once

#include "gda/derivation.hpp"
#include "gda/dsl.hpp"
#include "gda/invariant.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gda {

struct SessionConfig {
	SignMode sign = SignMode::paper_literal;
	EpsilonMode epsilon = EpsilonMode::pair;
	XiMode xi = XiMode::sum_enriched;
	int depth = 8;
	DiffKind d = DiffKind::delta;
	DiffLaws laws;
	CoherenceConfig coherence;

	VerifyConfig verify() const { return {sign, epsilon, laws, coherence}; }
	DeriveOptions derive() const { return {depth, sign, d, laws, coherence}; }
};

/// Command-line values that take precedence over `set` statements.
struct ConfigOverrides {
	std::optional<SignMode> sign;
	std::optional<EpsilonMode> epsilon;
	std::optional<XiMode> xi;
	std::optional<int> depth;
	std::optional<bool> literal_m;
};

struct NamedCondition {
	std::string label;
	Condition condition;
	dsl::SourcePos pos;
};

struct ClassDecl {
	std::string name;
	Factor phi;
	Completions completions;
	std::vector<DiffKind> symm;
};

/// Elaborated declaration file. Settings are file-global; other statements run in order.
class Session {
public:
	/// Throws ParseError citing the offending statement.
	static std::unique_ptr<Session> load(const dsl::SessionDecl& decl, const ConfigOverrides& overrides = {});
	static std::unique_ptr<Session> load_text(std::string_view text, const ConfigOverrides& overrides = {});
	static std::unique_ptr<Session> load_file(const std::string& path, const ConfigOverrides& overrides = {});

	dsl::SessionDecl decl;
	SessionConfig config;
	SymbolRegistry symbols;
	IdealRegistry ideals;
	HypothesisSet hypotheses;
	std::vector<NamedCondition> conditions;
	std::map<std::string, Completion> completions;
	std::map<std::string, TubaSet> tubas;
	std::map<std::string, ClassDecl> classes;
	std::vector<std::string> closed;  // completions whose closure is assumed

	/// Condition by label; falls back to the equivalent label.
	const NamedCondition* find_condition(const std::string& label) const;
	dsl::Resolver resolver() const;
	/// Parses "lhs = rhs" against the session symbols; ?names become placeholder generators.
	Condition parse_condition(std::string_view text) const;
};

std::string read_file(const std::string& path);

}  // namespace gda
