#pragma once

#include "gda/term.hpp"

#include <set>
#include <vector>

namespace gda {

/// paper_literal: every Leibniz summand carries +1.
/// koszul: summand i carries (-1)^(sum of the degrees of the preceding factors), where the degree is
/// the component the differential raises (n for delta, kappa for Delta).
enum class SignMode { paper_literal, koszul };
enum class EpsilonMode { pair, drop };

std::string_view to_string(SignMode s);
std::string_view to_string(EpsilonMode e);

/// Index effect of `d`, checked against optional bounds.
Index index_shift(DiffKind d, Index i, const IndexBounds& bounds = {});

struct LeibnizSummand {
	std::size_t position;
	int sign;  // +1 or -1
	Monomial monomial;  // the factor at `position` carries d on top, not canonicalized
	bool annihilated;   // vanishes by a chain-cochain or constant law
};

/// Raw Leibniz expansion of `d` over the given factor positions (all when `slots` is null).
std::vector<LeibnizSummand> leibniz_summands(DiffKind d, const Monomial& m, SignMode sign, const DiffLaws& laws,
                                             const std::set<std::size_t>* slots = nullptr);

/// d applied to a term via the Leibniz rule; result normalized.
Term apply_differential(DiffKind d, const Term& t, SignMode sign = SignMode::paper_literal, const DiffLaws& laws = {});

/// Leibniz sum restricted to the designated positions. Throws SlotError for out-of-range slots.
Term apply_slot_differential(DiffKind d, const Monomial& m, const std::set<std::size_t>& slots,
                             SignMode sign = SignMode::paper_literal, const DiffLaws& laws = {});

/// Auxiliary pairing: pair keeps both arguments, drop keeps only `a`.
std::vector<Factor> epsilon(EpsilonMode mode, std::span<const Factor> a, std::span<const Factor> x);
Term epsilon(EpsilonMode mode, const Term& a, const Term& x);

}  // namespace gda
