#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sphpersp
{

enum class ErrorKind
{
	AtObserver,
	AtBlowup,
	DuplicatePoints,
	CenterHasNoUniqueAntipode,
	BlowupInput,
	NotFrontal,
	NotAnterior,
	NotPosterior,
	ThroughObserver,
	FrontalLine,
	TooFewKnots,
	AnteriorNotMeridian,
	PoleElevation,
	InvalidParams,
	OffCircle,
	EmptyInput,
	SpanMismatch,
	ObserverInsideSphere,
};

inline std::string_view to_string(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::AtObserver: return "AtObserver";
	case ErrorKind::AtBlowup: return "AtBlowup";
	case ErrorKind::DuplicatePoints: return "DuplicatePoints";
	case ErrorKind::CenterHasNoUniqueAntipode: return "CenterHasNoUniqueAntipode";
	case ErrorKind::BlowupInput: return "BlowupInput";
	case ErrorKind::NotFrontal: return "NotFrontal";
	case ErrorKind::NotAnterior: return "NotAnterior";
	case ErrorKind::NotPosterior: return "NotPosterior";
	case ErrorKind::ThroughObserver: return "ThroughObserver";
	case ErrorKind::FrontalLine: return "FrontalLine";
	case ErrorKind::TooFewKnots: return "TooFewKnots";
	case ErrorKind::AnteriorNotMeridian: return "AnteriorNotMeridian";
	case ErrorKind::PoleElevation: return "PoleElevation";
	case ErrorKind::InvalidParams: return "InvalidParams";
	case ErrorKind::OffCircle: return "OffCircle";
	case ErrorKind::EmptyInput: return "EmptyInput";
	case ErrorKind::SpanMismatch: return "SpanMismatch";
	case ErrorKind::ObserverInsideSphere: return "ObserverInsideSphere";
	}
	return "Unknown";
}

// Raised by the geometric operations when an input is outside their domain.
class GeometryError : public std::runtime_error
{
public:
	GeometryError(ErrorKind kind, const std::string& what)
		: std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
	{
	}

	ErrorKind kind() const noexcept { return kind_; }

private:
	ErrorKind kind_;
};

// Raised by the scene reader; line numbers are 1-based.
class ParseError : public std::runtime_error
{
public:
	ParseError(std::size_t line, const std::string& reason)
		: std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason)
	{
	}

	std::size_t line() const noexcept { return line_; }
	const std::string& reason() const noexcept { return reason_; }

private:
	std::size_t line_;
	std::string reason_;
};

} // namespace sphpersp
