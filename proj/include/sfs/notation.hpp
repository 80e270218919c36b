#pragma once

#include <string>

#include "sfs/seifert.hpp"

namespace sfs {

/// Text form of Seifert invariants:
///   SFS[g=<int>; b=<int>; (<a1>,<b1>),...,(<ak>,<bk>)]
/// The fiber list may be empty: SFS[g=2; b=1;]. Whitespace is ignored
/// everywhere between tokens.
///
/// parse_manifold normalizes, so print(parse(s)) == s exactly on
/// normalized text. Parse errors report the byte offset.
SeifertInvariants parse_manifold(const std::string& text);

/// Parses without normalizing (loose beta allowed); used by normalize
/// round-trip checks and the parser itself.
SeifertData parse_loose(const std::string& text);

std::string print_manifold(const SeifertInvariants& m);

} // namespace sfs
