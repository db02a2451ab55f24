#pragma once

#include <optional>
#include <string>

#include "heckeb/partition.hpp"

namespace heckeb {

// Text encodings.  A partition prints as comma-separated parts ("3,1"),
// the empty partition as "∅".  A multipartition wraps its components in
// parentheses with "|" separators: "(3,1|2)", "(∅|∅)".

std::string to_text(const Partition& p);
std::string to_text(const Multipartition& m);

// Parses "3,1" (optionally "∅" or "" for the empty partition).
// Throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

// Parses "(3,1|2)"; the surrounding parentheses are optional.  If
// expected_level is given, the component count must match it.
Multipartition parse_multipartition(const std::string& text,
                                    std::optional<int> expected_level = std::nullopt);

}  // namespace heckeb
