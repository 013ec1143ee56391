#pragma once

#include "gda/term.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace gda {

enum class IdealKind { nonlocal2, local2, square2 };

std::string_view to_string(IdealKind k);

/// Declared members of the order-2 ideals, by factor pattern (generator plus diff stack).
class IdealRegistry {
public:
	using Pattern = std::pair<std::string, std::vector<DiffKind>>;

	void register_member(IdealKind kind, const Factor& pattern, const DiffLaws& laws = {});
	/// Registers the undifferentiated form of every generator carrying an ideal flag.
	void absorb_flags(const SymbolRegistry& symbols);
	bool is_member(IdealKind kind, const Factor& f, const DiffLaws& laws = {}) const;
	std::size_t size(IdealKind kind) const;
	/// Copy without one member; used for ablation runs.
	IdealRegistry without(IdealKind kind, const Factor& pattern, const DiffLaws& laws = {}) const;

	bool operator==(const IdealRegistry&) const = default;

private:
	const std::set<Pattern>& set_for(IdealKind kind) const;
	std::set<Pattern>& set_for(IdealKind kind);

	std::set<Pattern> nonlocal_, local_, square_;
};

enum class Vanishing { nonlocal_pair, local_adjacent, square_adjacent };

struct VanishingHit {
	Vanishing rule;
	std::size_t first;
	std::size_t second;
};

std::string describe(const VanishingHit& hit, const Monomial& m);

/// First order-2 vanishing pattern inside the monomial, if any.
std::optional<VanishingHit> find_vanishing(const Monomial& m, const IdealRegistry& ideals, const DiffLaws& laws = {});

/// Deletes every monomial killed by an ideal rule or a differential law; idempotent.
Term reduce(const Term& t, const IdealRegistry& ideals, const DiffLaws& laws = {});

enum class Variant { left, right, two_sided };

std::string_view to_string(Variant v);

/// One resolution of the element at `position` of an orthogonality product.
/// left:      X = (left neighbour, c)
/// right:     X = (c, right neighbour)
/// two_sided: X = (left neighbour, c, right neighbour)
struct FactorizationResult {
	Variant variant;
	std::size_t position;
	Factor resolved;
	Monomial replacement;
	SymbolPtr fresh;

	Term lhs() const { return Term::of(resolved); }
	Term rhs() const { return Term::of(replacement); }
};

/// Every resolution variant for every position of `product` (the right side of 0 = product).
/// Fresh generator indices solve the coherence equations of the replacement; a variant whose solution
/// violates the configured bounds is reported through `violations` and skipped.
std::vector<FactorizationResult> factorization_moves(const Monomial& product, SymbolRegistry& symbols,
                                                     const CoherenceConfig& config = {},
                                                     std::vector<std::string>* violations = nullptr);

/// Index a fresh generator must carry so that `neighbours` around it multiply to `target`.
Index solve_fresh_index(const Index& target, std::span<const Index> neighbours, const CoherenceConfig& config);

}  // namespace gda
