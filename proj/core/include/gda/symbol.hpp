#pragma once

#include "gda/index.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace gda {

enum class DiffKind : std::uint8_t { delta = 0, Delta = 1 };

/// Ideal-membership flags a generator may carry on its undifferentiated form.
enum class IdealFlag : std::uint8_t { nonlocal2 = 1, local2 = 2, square2 = 4 };

class FlagSet {
public:
	constexpr FlagSet() = default;
	constexpr FlagSet(std::initializer_list<IdealFlag> flags)
	{
		for (auto f : flags) bits_ |= static_cast<std::uint8_t>(f);
	}
	constexpr bool has(IdealFlag f) const { return (bits_ & static_cast<std::uint8_t>(f)) != 0; }
	constexpr void set(IdealFlag f) { bits_ |= static_cast<std::uint8_t>(f); }
	constexpr bool empty() const { return bits_ == 0; }
	constexpr bool operator==(const FlagSet&) const = default;

private:
	std::uint8_t bits_ = 0;
};

enum class Role : std::uint8_t { plain, completion, picked };

std::string_view to_string(Role r);

struct GeneratorSymbol {
	std::string name;
	Index index;
	FlagSet flags;
	bool fresh = false;
	Role role = Role::plain;
	/// Differentials declared to annihilate this generator (dX = 0).
	std::uint8_t constant_for = 0;

	bool is_constant_for(DiffKind d) const { return (constant_for >> static_cast<int>(d)) & 1u; }
};

using SymbolPtr = std::shared_ptr<const GeneratorSymbol>;

/// Reserved prefix for generators introduced by factorization moves.
inline constexpr std::string_view fresh_prefix = "_f";

/// Session-wide symbol table. Registrations are serialized; symbols are immutable once issued.
class SymbolRegistry {
public:
	SymbolPtr declare(GeneratorSymbol symbol);
	SymbolPtr declare(const std::string& name, Index index, FlagSet flags = {}, Role role = Role::plain);
	/// Issues `_f<k>` with the next counter value.
	SymbolPtr fresh(Index index, Role role = Role::plain);

	SymbolPtr find(std::string_view name) const;
	SymbolPtr get(std::string_view name) const;  // throws Error when unknown
	std::vector<SymbolPtr> symbols() const;      // declaration order
	std::size_t fresh_count() const;

private:
	mutable std::mutex mutex_;
	std::map<std::string, SymbolPtr, std::less<>> by_name_;
	std::vector<SymbolPtr> order_;
	std::size_t fresh_counter_ = 0;
};

bool is_identifier(std::string_view name);

}  // namespace gda
