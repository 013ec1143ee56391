#pragma once

#include "gda/derivation.hpp"
#include "gda/invariant.hpp"
#include "gda/model.hpp"
#include "gda/oracle.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gda {

enum class ReportFormat { text, json };

/// Version tag carried by every JSON report.
inline constexpr std::string_view report_schema_id = "gda-report/1";

struct CheckedCondition {
	std::string label;
	std::string text;
	std::vector<CoherenceEquation> equations;
};

struct CheckReport {
	std::string file;
	std::vector<CheckedCondition> conditions;
	std::size_t generators = 0;
	std::size_t hypotheses = 0;
	std::vector<std::string> classes;
};

struct ModelCheckReport {
	std::string file;
	Field field = Field::gf2;
	SignMode sign = SignMode::paper_literal;
	int trials = 0;
	std::uint64_t seed = 0;
	std::vector<IdentityResult> results;
	std::vector<std::string> limitations;

	bool success() const;
};

/// Reports end with a newline; equal inputs give byte-identical output.
std::string emit_tree(const DerivationTree& tree, ReportFormat format, std::string_view start = {});
std::string emit_verification(const std::vector<VerificationReport>& reports, ReportFormat format);
std::string emit_check(const CheckReport& report, ReportFormat format);
std::string emit_model_check(const ModelCheckReport& report, ReportFormat format);
std::string emit_error(std::string_view message, ReportFormat format);

}  // namespace gda
