#pragma once

#include <string>

#include <json.hpp>

#include "latt/hassett.hpp"

namespace latt {

/// Canonical Gram document: {"rank": n, "gram": [[...]]}.
nlohmann::ordered_json gram_to_json(const GramMatrix& g);

/// Strict parse: integer entries, square, symmetric.  Throws InvalidInput
/// or NotSymmetric.
GramMatrix gram_from_json(const nlohmann::json& j);

GramMatrix read_gram_file(const std::string& path);

nlohmann::ordered_json image_report_to_json(const ImageReport& r);

nlohmann::ordered_json certificate_to_json(const ZCertificate& c);

/// Byte-stable serialization used both for files and for digests.
std::string canonical_dump(const nlohmann::ordered_json& j);

}  // namespace latt
