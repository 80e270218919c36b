#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sfs/covers.hpp"
#include "sfs/gradient.hpp"
#include "sfs/heegaard.hpp"
#include "sfs/rational.hpp"

namespace sfs::io {

using nlohmann::json;

/// Version of every JSON document this tool emits.
inline constexpr int kSchemaVersion = 1;

json to_json(const Rational& r);
json to_json(const GenusInterval& g);
json to_json(const ChiInterval& c);
json to_json(const RationalInterval& iv);
json to_json(const GradientTerm& t);
json to_json(const GradientReport& report);

/// Cover descriptors interchange as {"sfs": "<notation>", "d", "m", "l"};
/// the base comes from context and the covering invariants are
/// re-validated on load.
json to_json(const CoverDescriptor& cover);
CoverDescriptor cover_from_json(const SeifertInvariants& base, const json& j);
std::vector<CoverDescriptor> covers_from_json(const SeifertInvariants& base, const json& j);

} // namespace sfs::io
