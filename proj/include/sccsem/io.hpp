#pragma once

#include "sccsem/criteria.hpp"
#include "sccsem/framework.hpp"
#include "sccsem/generators.hpp"
#include "sccsem/semantics.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace sccsem {

/// Facts `arg(NAME).` and `att(A,B).`, any number per line; `%` starts a
/// comment. Labels are indexed in order of first declaration. Throws
/// ParseError carrying the 1-based line number.
Framework parse_apx(std::string_view text);
std::string serialize_apx(const Framework& f);

/// Node lines `ID`, a `#` separator line, then edge lines `ID ID`.
Framework parse_tgf(std::string_view text);
std::string serialize_tgf(const Framework& f);

enum class Format { text, json };
Format parse_format(std::string_view name);

inline constexpr int json_schema = 1;
using Json = nlohmann::ordered_json;

/// Labels of s in argument order.
Json labels_json(const Framework& f, const ArgSet& s);

Json to_json(const Framework& f, Semantics which, const ExtensionSet& es);
Json to_json(const Framework& f, const CriterionReport& r);
Json to_json(const TruncationReport& r);

/// JSON documents are emitted compactly with a trailing newline; text output
/// is meant for people.
std::string emit_report(const Framework& f, Semantics which, const ExtensionSet& es, Format format);
std::string emit_report(const Framework& f, const CriterionReport& r, Format format);
std::string emit_report(const TruncationReport& r, Format format);

std::string dump(const Json& j);

} // namespace sccsem
