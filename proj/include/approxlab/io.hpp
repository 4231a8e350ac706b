#pragma once

#include <string>

#include "approxlab/element_set.hpp"
#include "approxlab/structures.hpp"

namespace approxlab {

/// Parses the group descriptor mini-language:
///   Z, Z^2, Z/10, (Z/5)^3, H(Z), H(7), SL2(7), C4*Z
GroupDescriptor parse_group(const std::string& text);

/// Reads an element file: one element per line, blank lines and '#' comments
/// ignored.
ElementSet read_set_file(const std::string& path, const Group& ctx);

void write_set_file(const std::string& path, const ElementSet& s);

/// Parses a generator spec string, e.g.
///   "prog x=9;2 L=2;1"  "box L=2;1"  "nilprog x=1,0,0;0,1,0 L=2;2"
///   "Q L1=2 L2=3"
/// In arity-1 groups the x list may also be comma-separated.
StructuredSpec parse_structured_spec(const std::string& text, const Group& ctx, QL2Mode q_mode);

} // namespace approxlab
