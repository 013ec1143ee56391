#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gda {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class NameClash : public Error { using Error::Error; };
class CoherenceViolation : public Error { using Error::Error; };
class HeterogeneousSum : public Error { using Error::Error; };
class SlotError : public Error { using Error::Error; };
class LayoutError : public Error { using Error::Error; };
class ArityError : public Error { using Error::Error; };
class HypothesisError : public Error { using Error::Error; };
class ModelError : public Error { using Error::Error; };
class AssignmentError : public Error { using Error::Error; };

/// Diagnostic raised by the declaration parser and elaborator.
class ParseError : public Error {
public:
	ParseError(std::size_t line, std::size_t column, const std::string& message)
	    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
	      line_(line), column_(column), message_(message) {}

	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }
	const std::string& message() const noexcept { return message_; }

private:
	std::size_t line_;
	std::size_t column_;
	std::string message_;
};

/// Declaration rejected because a condition violates the index coherence equations.
class IncoherentDeclaration : public ParseError {
public:
	using ParseError::ParseError;
};

}  // namespace gda
