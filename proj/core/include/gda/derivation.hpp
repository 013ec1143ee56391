#pragma once

#include "gda/condition.hpp"
#include "gda/ideal.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gda {

enum class MoveKind { root, differentiate, factorize };

std::string_view to_string(MoveKind m);

struct DeriveOptions {
	int depth = 8;  // bound on differential moves along a branch
	SignMode sign = SignMode::paper_literal;
	DiffKind d = DiffKind::delta;
	DiffLaws laws;
	CoherenceConfig coherence;
};

struct TreeNode {
	std::size_t id = 0;
	std::optional<std::size_t> parent;
	MoveKind move = MoveKind::root;
	std::optional<Variant> variant;  // factorization moves only
	std::size_t position = 0;        // factorization moves only
	Condition condition;
	int depth = 0;
	/// "0", "(II)", "0 or (II)" for classified nodes, empty otherwise.
	std::string outcome;
	bool repeat = false;       // label already expanded elsewhere
	bool depth_limit = false;  // stopped by the depth bound
	bool has_fresh = false;
	std::vector<std::size_t> children;
};

/// Periodic family 0=(a_k,b_k), d a_k=(a_{k+1},b_k), d b_k=(a_k,b_{k+1}) with
/// a_{k+1} = shift(a_k) - b_k and b_{k+1} = shift(b_k) - a_k.
struct PeriodicFamily {
	std::string label;
	std::size_t seed = 0;                // node that first expanded the label
	std::vector<std::size_t> repeats;    // repeat leaves with fresh generators
	Index alpha0;
	Index beta0;
	DiffKind d = DiffKind::delta;

	Index alpha(int k) const;
	Index beta(int k) const;
	/// The three relations at step k >= 0 over generators alpha_k, beta_k, alpha_{k+1}, beta_{k+1}.
	std::array<Condition, 3> instantiate(int k) const;
};

struct DerivationTree {
	std::vector<TreeNode> nodes;
	std::vector<std::string> pruned;  // coherence failures met while expanding
	std::vector<PeriodicFamily> periodic;
	DiffKind d = DiffKind::delta;

	const TreeNode& root() const { return nodes.front(); }
	bool empty() const { return nodes.size() <= 1; }
	/// Canonical printing of every node condition, in node order.
	std::vector<std::string> lines() const;
	/// Alpha-canonical printing of every node condition.
	std::vector<std::string> canonical_lines() const;
};

/// Depth-first exploration alternating the differential move and the factorization moves.
DerivationTree derive_tree(const Condition& start, const DeriveOptions& options, SymbolRegistry& symbols,
                           const IdealRegistry& ideals = {});

std::vector<PeriodicFamily> detect_periodic(const DerivationTree& tree);

}  // namespace gda
