// io.hpp -- strategy text format and JSON encoding

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mmdim/core.hpp"

namespace mmdim {

/// Malformed strategy input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Reads the text format:
///
///     a b c
///     q1 q2 q3
///     ...
///
/// Blank lines and lines starting with '#' are skipped, and a '#' later in a
/// line starts a comment. Parsing is strict:
/// wrong arity, non-numeric tokens, out-of-range colors and duplicate
/// questions all raise ParseError with the offending line.
Strategy parse_strategy_text(std::istream& in);
Strategy parse_strategy_text(std::string_view text);

/// Accepts either the text format or the JSON produced by to_json().
Strategy parse_strategy(std::string_view text);

void write_strategy_text(std::ostream& out, const Strategy& s);
std::string strategy_text(const Strategy& s);

nlohmann::json to_json(const Params& p);
nlohmann::json to_json(const Question& q);
/// {"params":[a,b,c],"questions":[[q1,q2,q3],...]}
nlohmann::json to_json(const Strategy& s);

Strategy strategy_from_json(const nlohmann::json& j);

} // namespace mmdim
