#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "oh/errors.hpp"

namespace oh {

using json = nlohmann::json;

std::string slurp(const std::string& path);
void spit(const std::string& path, const std::string& content);

// Parses text as JSON; on failure throws ParseError carrying byte offset and
// the 1-based line computed from it.
json parse_json_text(const std::string& text, const std::string& context);
json parse_json_file(const std::string& path);

// Canonical serialization used for state dumps and golden comparisons:
// two-space indent, keys sorted (nlohmann objects are map-backed), trailing
// newline.
std::string canonical_text(const json& j);

uint64_t fnv1a64(const std::string& s);
std::string fnv1a64_hex(const std::string& s);

// Cheap deterministic mixer for seeded id/value generation.
uint64_t splitmix64(uint64_t x);

std::string to_hex(uint64_t v, int digits);

}  // namespace oh
