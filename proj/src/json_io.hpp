#pragma once

#include <string>

#include <json.hpp>

#include "oracle.hpp"
#include "syndrome.hpp"

namespace gicodes {

/// JSON wire formats used by descriptor files and the CLI. A Gaussian integer
/// is a two-element integer array [re, im]; a polynomial is an array of those
/// in ascending degree (the zero polynomial is []); vectors are arrays of
/// [re, im] of their stated length. Loaders throw BadDescriptor on anything
/// malformed or internally inconsistent.

nlohmann::json to_json(Gaussian z);
Gaussian gaussian_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Poly& f);
Poly poly_from_json(const ResidueRing& ring, const nlohmann::json& j, bool require_canonical);

nlohmann::json to_json(const ResidueRing& ring);
ResidueRing ring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConstacyclicCode& code);
ConstacyclicCode code_from_json(const nlohmann::json& j);
ConstacyclicCode code_from_json_text(const std::string& text);

nlohmann::json to_json(const Matrix& m);
nlohmann::json vector_to_json(std::span<const Gaussian> v);
std::vector<Gaussian> vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SyndromeTable& table);
nlohmann::json to_json(const oracle::DecodeReport& report);

/// Aligned human-readable renderings for the CLI's default (non --json) mode.
std::string poly_to_text(const Poly& f);
std::string matrix_to_text(const Matrix& m);
std::string code_to_text(const ConstacyclicCode& code);
std::string table_to_text(const SyndromeTable& table);
std::string report_to_text(const oracle::DecodeReport& report);
std::string vector_to_text(std::span<const Gaussian> v);

} // namespace gicodes
