#pragma once

#include <iosfwd>
#include <string>

#include "rba/instance.hpp"

namespace rba {

// Canonical instance file:
//   rba 1 <n> <k>
//   <color> <tail> <head>        (one line per arc, sorted by (color, tail, head))
// '#' starts a comment anywhere; blank lines are ignored on input.
std::string serialize_instance(const ColoredInstance& inst);

// Parses and validates; ParseError carries the offending line number,
// InstanceError propagates from validation.
ColoredInstance parse_instance(std::istream& in);
ColoredInstance parse_instance(const std::string& text);

ColoredInstance load_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// FNV-1a 64-bit over the canonical serialization, as 16 hex digits.
std::string digest_hex(const std::string& text);
std::string instance_digest(const ColoredInstance& inst);

}  // namespace rba
