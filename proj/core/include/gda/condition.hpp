#pragma once

#include "gda/differential.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gda {

/// Choice vector J = (j_1, ..., j_l), written with I for 1 and 0 for 0, e.g. "(I0I)".
class ChoiceVector {
public:
	ChoiceVector() = default;
	explicit ChoiceVector(std::vector<bool> entries) : entries_(std::move(entries)) {}

	/// Accepts "(I0I)"; the digits 1 and the letter O are tolerated.
	static ChoiceVector parse(std::string_view text);

	std::size_t size() const { return entries_.size(); }
	bool operator[](std::size_t i) const { return entries_[i]; }
	std::string label() const;

	bool operator==(const ChoiceVector&) const = default;

private:
	std::vector<bool> entries_;
};

/// All 2^l choice vectors of length l, in binary order with 0 before I.
std::vector<ChoiceVector> enumerate_choices(std::size_t l);

enum class ConditionKind { differential, orthogonality };

std::string_view to_string(ConditionKind k);

/// An equation lhs = rhs. Orthogonality iff lhs is the zero term.
struct Condition {
	std::string label;
	Term lhs;
	Term rhs;
	/// Index every side must carry.
	Index target;

	ConditionKind kind() const { return lhs.is_zero() ? ConditionKind::orthogonality : ConditionKind::differential; }
	bool trivial() const { return lhs.is_zero() && rhs.is_zero(); }

	bool operator==(const Condition& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

/// lhs = d(gamma) (or 0), rhs = product of d^{j_i} phi_i. Throws ArityError when |phis| != |J|.
Condition make_condition(const ChoiceVector& J, const std::optional<Term>& gamma, std::span<const Term> phis,
                         DiffKind d = DiffKind::delta, const DiffLaws& laws = {});

/// Condition from explicit sides; the target is index(lhs), or index(rhs) for orthogonality.
Condition make_condition(Term lhs, Term rhs, const CoherenceConfig& config = {});

/// "(I0)" style label of a product: I for a differentiated factor, 0 otherwise.
std::string pattern_label(const Monomial& m);
/// Label of a single-product right side, empty otherwise.
std::string pattern_label(const Condition& c);

/// Drops an undifferentiated end that plays no role: (I00) -> (I0), (00I) -> (0I). Other labels unchanged.
std::string equivalent_label(const std::string& label);

struct CoherenceEquation {
	char component;  // 'n', 'm' or 'k'
	std::int64_t expected;
	std::int64_t actual;
	std::string text;  // e.g. "n: 0 = 1 + (-1)"

	bool holds() const { return expected == actual; }
};

/// n, m and kappa equations for every product on the right side.
std::vector<CoherenceEquation> coherence_constraints(const Condition& c, const CoherenceConfig& config = {});
/// Throws CoherenceViolation naming the first failing equation; also enforces configured bounds.
void check_coherence(const Condition& c, const CoherenceConfig& config = {});

/// Canonical printing "lhs = rhs". An orthogonality right side is scaled to leading coefficient 1.
std::string to_string(const Condition& c);
/// Printing with fresh generators replaced by ?1, ?2, ... taking the lexicographically least assignment.
std::string alpha_canonical(const Condition& c);
/// Right side with leading coefficient 1 (orthogonality normal form).
Term monic(const Term& t);

struct FamilyMember {
	ChoiceVector J;
	std::optional<Term> gamma;
	std::vector<Term> phis;
};

/// Set of conditions keyed by canonical printing; duplicates merge.
using ConditionSet = std::map<std::string, Condition>;

ConditionSet symmetrize(std::span<const FamilyMember> family, DiffKind d = DiffKind::delta, const DiffLaws& laws = {});

}  // namespace gda
