#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fdrelay {

/// Cooperation policy identifier.
enum class ProtocolKind {
  kDt,               // direct transmission, relay always silent
  kSdf,              // relay assists whenever the S->R link is not in outage
  kIsdf,             // as SDF, but only after a destination outage feedback bit
  kNonSelectiveFdr,  // relay transmits every block regardless of link states
};

/// Lower-case canonical name: dt, sdf, isdf, nsfdr.
std::string_view to_string(ProtocolKind kind);

/// Parses a canonical name (case-insensitive); nullopt when unknown.
std::optional<ProtocolKind> parse_protocol(std::string_view name);

}  // namespace fdrelay
