#ifndef GKLS_JSON_IO_HPP
#define GKLS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "gkls/superop.hpp"

namespace gkls {

/// Liouvillian document:
///   { "n": int, "ordering": "row-major" | "paper-v3",
///     "matrix": n²×n² array of [re, im] pairs }
/// Doubles round-trip bit-exactly through write/read.
nlohmann::json liouvillian_to_json(const Dissipator& l);
Dissipator liouvillian_from_json(const nlohmann::json& doc);

Dissipator load_liouvillian(const std::string& path);
void save_liouvillian(const Dissipator& l, const std::string& path);

}  // namespace gkls

#endif
