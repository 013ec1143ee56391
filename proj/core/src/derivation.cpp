#include "gda/derivation.hpp"

#include "gda/error.hpp"

#include <map>
#include <set>

namespace gda {

std::string_view to_string(MoveKind m)
{
	switch (m) {
	case MoveKind::root: return "root";
	case MoveKind::differentiate: return "differentiate";
	case MoveKind::factorize: return "factorize";
	}
	return "root";
}

namespace {

bool mentions_fresh(const Term& t)
{
	for (const auto& [m, c] : t)
		for (const auto& f : m.factors)
			if (f.gen->fresh) return true;
	return false;
}

std::string classify(const Condition& c)
{
	if (c.trivial()) return "0";
	if (c.kind() != ConditionKind::orthogonality || c.rhs.size() != 1) return {};
	const std::string label = pattern_label(c);
	const Rational& raw = c.rhs.begin()->second;
	return abs(raw) != 1 ? "0 or " + label : label;
}

class Explorer {
public:
	Explorer(const DeriveOptions& o, SymbolRegistry& s, const IdealRegistry& i) : opt_(o), symbols_(s), ideals_(i) {}

	DerivationTree run(const Condition& start)
	{
		tree_.d = opt_.d;
		add_node(std::nullopt, MoveKind::root, std::nullopt, 0, start, 0);
		expand(0);
		tree_.periodic = detect_periodic(tree_);
		return std::move(tree_);
	}

private:
	std::size_t add_node(std::optional<std::size_t> parent, MoveKind move, std::optional<Variant> variant,
	                     std::size_t position, Condition c, int depth)
	{
		TreeNode n;
		n.id = tree_.nodes.size();
		n.parent = parent;
		n.move = move;
		n.variant = variant;
		n.position = position;
		if (c.label.empty()) c.label = pattern_label(c);
		n.outcome = classify(c);
		n.has_fresh = mentions_fresh(c.lhs) || mentions_fresh(c.rhs);
		n.condition = std::move(c);
		n.depth = depth;
		if (parent) tree_.nodes[*parent].children.push_back(n.id);
		tree_.nodes.push_back(std::move(n));
		return tree_.nodes.size() - 1;
	}

	void expand(std::size_t id)
	{
		const Condition c = tree_.nodes[id].condition;
		const int depth = tree_.nodes[id].depth;
		if (c.trivial()) return;

		const bool single_orthogonal = c.kind() == ConditionKind::orthogonality && c.rhs.size() == 1;
		if (single_orthogonal) {
			const std::string label = pattern_label(c);
			if (id != 0 && seen_.count(label)) {
				tree_.nodes[id].repeat = true;
				return;
			}
			seen_.insert(label);
		}
		if (depth >= opt_.depth) {
			tree_.nodes[id].depth_limit = true;
			return;
		}

		differentiate(id, c, depth);
		if (single_orthogonal && c.rhs.begin()->first.arity() >= 2) factorize(id, c, depth);
	}

	void differentiate(std::size_t id, const Condition& c, int depth)
	{
		Condition child;
		child.lhs = reduce(apply_differential(opt_.d, c.lhs, opt_.sign, opt_.laws), ideals_, opt_.laws);
		child.rhs = reduce(apply_differential(opt_.d, c.rhs, opt_.sign, opt_.laws), ideals_, opt_.laws);
		child.target = shift(opt_.d, c.target);
		child.label = pattern_label(child);
		try {
			check_coherence(child, opt_.coherence);
		} catch (const CoherenceViolation& e) {
			tree_.pruned.push_back("node " + std::to_string(id) + " differentiate: " + e.what());
			return;
		}
		std::size_t k = add_node(id, MoveKind::differentiate, std::nullopt, 0, std::move(child), depth + 1);
		expand(k);
	}

	void factorize(std::size_t id, const Condition& c, int depth)
	{
		std::vector<std::string> violations;
		auto moves = factorization_moves(c.rhs.begin()->first, symbols_, opt_.coherence, &violations);
		for (const auto& v : violations) tree_.pruned.push_back("node " + std::to_string(id) + " factorize " + v);
		for (auto& mv : moves) {
			Condition child;
			child.lhs = mv.lhs();
			child.rhs = mv.rhs();
			child.target = mv.resolved.effective_index();
			child.label = pattern_label(child);
			try {
				check_coherence(child, opt_.coherence);
			} catch (const CoherenceViolation& e) {
				tree_.pruned.push_back("node " + std::to_string(id) + " factorize: " + e.what());
				continue;
			}
			std::size_t k = add_node(id, MoveKind::factorize, mv.variant, mv.position, std::move(child), depth);
			expand(k);
		}
	}

	const DeriveOptions& opt_;
	SymbolRegistry& symbols_;
	const IdealRegistry& ideals_;
	DerivationTree tree_;
	std::set<std::string> seen_;
};

}  // namespace

DerivationTree derive_tree(const Condition& start, const DeriveOptions& options, SymbolRegistry& symbols,
                           const IdealRegistry& ideals)
{
	if (options.depth < 1) throw Error("derivation depth must be at least 1");
	return Explorer(options, symbols, ideals).run(start);
}

std::vector<std::string> DerivationTree::lines() const
{
	std::vector<std::string> out;
	for (const auto& n : nodes) out.push_back(to_string(n.condition));
	return out;
}

std::vector<std::string> DerivationTree::canonical_lines() const
{
	std::vector<std::string> out;
	for (const auto& n : nodes) out.push_back(alpha_canonical(n.condition));
	return out;
}

Index PeriodicFamily::alpha(int k) const
{
	Index a = alpha0, b = beta0;
	for (int i = 0; i < k; ++i) {
		Index na = shift(d, a) - b;
		Index nb = shift(d, b) - a;
		a = na;
		b = nb;
	}
	return a;
}

Index PeriodicFamily::beta(int k) const
{
	Index a = alpha0, b = beta0;
	for (int i = 0; i < k; ++i) {
		Index na = shift(d, a) - b;
		Index nb = shift(d, b) - a;
		a = na;
		b = nb;
	}
	return b;
}

namespace {

Factor family_factor(const std::string& base, int k, Index index)
{
	GeneratorSymbol g;
	g.name = base + "_" + std::to_string(k);
	g.index = index;
	return make_factor(std::make_shared<const GeneratorSymbol>(std::move(g)));
}

}  // namespace

std::array<Condition, 3> PeriodicFamily::instantiate(int k) const
{
	if (k < 0) throw Error("periodic families are instantiated for k >= 0 only");
	const Factor ak = family_factor("alpha", k, alpha(k));
	const Factor bk = family_factor("beta", k, beta(k));
	const Factor ak1 = family_factor("alpha", k + 1, alpha(k + 1));
	const Factor bk1 = family_factor("beta", k + 1, beta(k + 1));

	std::array<Condition, 3> out;
	out[0].rhs = Term::of(Monomial({ak, bk}));
	out[0].target = ak.effective_index() + bk.effective_index();
	out[1].lhs = Term::of(push_diff(ak, d));
	out[1].rhs = Term::of(Monomial({ak1, bk}));
	out[1].target = shift(d, ak.effective_index());
	out[2].lhs = Term::of(push_diff(bk, d));
	out[2].rhs = Term::of(Monomial({ak, bk1}));
	out[2].target = shift(d, bk.effective_index());
	for (auto& c : out) c.label = pattern_label(c);
	return out;
}

std::vector<PeriodicFamily> detect_periodic(const DerivationTree& tree)
{
	std::map<std::string, PeriodicFamily> families;
	std::map<std::string, std::size_t> first_expanded;
	for (const auto& n : tree.nodes) {
		const Condition& c = n.condition;
		if (c.kind() != ConditionKind::orthogonality || c.rhs.size() != 1) continue;
		const std::string label = pattern_label(c);
		if (!n.repeat) first_expanded.try_emplace(label, n.id);
	}
	for (const auto& n : tree.nodes) {
		if (!n.repeat || !n.has_fresh) continue;
		const std::string label = pattern_label(n.condition);
		if (label != "(II)") continue;
		auto seed = first_expanded.find(label);
		if (seed == first_expanded.end()) continue;
		auto [it, inserted] = families.try_emplace(label);
		PeriodicFamily& fam = it->second;
		if (inserted) {
			const Monomial& m = tree.nodes[seed->second].condition.rhs.begin()->first;
			fam.label = label;
			fam.seed = seed->second;
			fam.alpha0 = m.factors[0].effective_index();
			fam.beta0 = m.factors[1].effective_index();
			fam.d = tree.d;
		}
		fam.repeats.push_back(n.id);
	}
	std::vector<PeriodicFamily> out;
	for (auto& [label, fam] : families) out.push_back(std::move(fam));
	return out;
}

}  // namespace gda
