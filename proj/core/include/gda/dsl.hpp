#pragma once

#include "gda/ideal.hpp"
#include "gda/rational.hpp"
#include "gda/term.hpp"

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gda::dsl {

struct FactorExpr {
	std::string name;
	std::vector<DiffKind> diffs;  // innermost first
	Overlap overlap;

	bool operator==(const FactorExpr&) const = default;
};

struct ProductExpr {
	Rational coeff = 1;
	std::vector<FactorExpr> factors;
	bool parenthesized = true;

	bool operator==(const ProductExpr&) const = default;
};

/// Sum of products; no summands means the zero term.
struct TermExpr {
	std::vector<ProductExpr> summands;

	bool operator==(const TermExpr&) const = default;
};

struct SetStmt {
	std::string key;
	std::string value;
	bool operator==(const SetStmt&) const = default;
};

struct BoundStmt {
	std::string component;  // n, m or kappa
	std::string op;         // >= or <=
	std::int64_t value = 0;
	bool operator==(const BoundStmt&) const = default;
};

struct GenStmt {
	std::string name;
	Index index;
	std::vector<std::string> flags;
	bool operator==(const GenStmt&) const = default;
};

struct IdealStmt {
	IdealKind kind = IdealKind::nonlocal2;
	FactorExpr pattern;
	bool operator==(const IdealStmt&) const = default;
};

struct ConditionStmt {
	std::string label;
	TermExpr lhs;
	TermExpr rhs;
	bool operator==(const ConditionStmt&) const = default;
};

struct CompletionStmt {
	std::string name;
	std::vector<FactorExpr> picked;
	std::vector<FactorExpr> completions;
	bool operator==(const CompletionStmt&) const = default;
};

struct ClosedStmt {
	std::string completion;
	DiffKind d = DiffKind::delta;
	bool operator==(const ClosedStmt&) const = default;
};

struct TubaStmt {
	std::string name;
	std::string phi;
	std::string psi;
	std::array<std::string, 4> completions;
	DiffKind d = DiffKind::delta;
	bool operator==(const TubaStmt&) const = default;
};

struct ClassStmt {
	std::string name;
	std::string phi;
	std::array<std::string, 4> completions;
	std::vector<DiffKind> symm;  // empty: the session differential only
	bool operator==(const ClassStmt&) const = default;
};

using Statement = std::variant<SetStmt, BoundStmt, GenStmt, IdealStmt, ConditionStmt, CompletionStmt, ClosedStmt,
                               TubaStmt, ClassStmt>;

struct SourcePos {
	std::size_t line = 1;
	std::size_t column = 1;
};

struct SessionDecl {
	std::vector<Statement> statements;
	std::vector<SourcePos> positions;  // parallel to statements, ignored by ==

	bool operator==(const SessionDecl& o) const { return statements == o.statements; }
};

/// Throws ParseError with line and column.
SessionDecl parse(std::string_view text);
/// Canonical source text; parse(print(s)) == s.
std::string print(const SessionDecl& decl);
std::string print(const Statement& s);
std::string print(const TermExpr& t);
std::string print(const FactorExpr& f);

TermExpr parse_term(std::string_view text);
/// "lhs = rhs" on one line. With `placeholders`, names starting with ? are accepted.
std::pair<TermExpr, TermExpr> parse_equation(std::string_view text, bool placeholders = false);

using Resolver = std::function<SymbolPtr(const std::string&)>;

/// Throws Error for unknown names and, when `strict`, HeterogeneousSum for mixed indices.
Factor to_factor(const FactorExpr& f, const Resolver& resolve);
Term to_term(const TermExpr& t, const Resolver& resolve, const CoherenceConfig& config = {}, bool strict = true);

std::string_view diff_keyword(DiffKind d);

}  // namespace gda::dsl
