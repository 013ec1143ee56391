#include "gda/symbol.hpp"

#include "gda/error.hpp"

#include <cctype>

namespace gda {

std::string_view to_string(Role r)
{
	switch (r) {
	case Role::plain: return "plain";
	case Role::completion: return "completion";
	case Role::picked: return "picked";
	}
	return "plain";
}

bool is_identifier(std::string_view name)
{
	if (name.empty()) return false;
	auto head = static_cast<unsigned char>(name.front());
	if (!(std::isalpha(head) || head == '_' || head >= 0x80)) return false;
	for (unsigned char c : name)
		if (!(std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80)) return false;
	return name != "d" && name != "D";
}

SymbolPtr SymbolRegistry::declare(GeneratorSymbol symbol)
{
	if (!is_identifier(symbol.name))
		throw NameClash("'" + symbol.name + "' is not a valid generator name");
	if (!symbol.fresh && symbol.name.front() == '_')
		throw NameClash("names starting with '_' are reserved for fresh generators: " + symbol.name);
	std::lock_guard lock(mutex_);
	if (by_name_.count(symbol.name))
		throw NameClash("generator '" + symbol.name + "' is already declared");
	auto ptr = std::make_shared<const GeneratorSymbol>(std::move(symbol));
	by_name_.emplace(ptr->name, ptr);
	order_.push_back(ptr);
	return ptr;
}

SymbolPtr SymbolRegistry::declare(const std::string& name, Index index, FlagSet flags, Role role)
{
	return declare(GeneratorSymbol{name, index, flags, false, role, 0});
}

SymbolPtr SymbolRegistry::fresh(Index index, Role role)
{
	std::lock_guard lock(mutex_);
	std::string name;
	do {
		name = std::string(fresh_prefix) + std::to_string(++fresh_counter_);
	} while (by_name_.count(name));
	auto ptr = std::make_shared<const GeneratorSymbol>(GeneratorSymbol{name, index, {}, true, role, 0});
	by_name_.emplace(name, ptr);
	order_.push_back(ptr);
	return ptr;
}

SymbolPtr SymbolRegistry::find(std::string_view name) const
{
	std::lock_guard lock(mutex_);
	auto it = by_name_.find(name);
	return it == by_name_.end() ? nullptr : it->second;
}

SymbolPtr SymbolRegistry::get(std::string_view name) const
{
	if (auto s = find(name)) return s;
	throw Error("unknown generator '" + std::string(name) + "'");
}

std::vector<SymbolPtr> SymbolRegistry::symbols() const
{
	std::lock_guard lock(mutex_);
	return order_;
}

std::size_t SymbolRegistry::fresh_count() const
{
	std::lock_guard lock(mutex_);
	return fresh_counter_;
}

}  // namespace gda
