#include "fdrelay/protocol_kind.hpp"

#include <algorithm>
#include <cctype>

namespace fdrelay {

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kDt:
      return "dt";
    case ProtocolKind::kSdf:
      return "sdf";
    case ProtocolKind::kIsdf:
      return "isdf";
    case ProtocolKind::kNonSelectiveFdr:
      return "nsfdr";
  }
  return "?";
}

std::optional<ProtocolKind> parse_protocol(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "dt") return ProtocolKind::kDt;
  if (lower == "sdf") return ProtocolKind::kSdf;
  if (lower == "isdf") return ProtocolKind::kIsdf;
  if (lower == "nsfdr") return ProtocolKind::kNonSelectiveFdr;
  return std::nullopt;
}

}  // namespace fdrelay
