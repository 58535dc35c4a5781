#pragma once

#include "pgcover/constructions.hpp"
#include "pgcover/covers.hpp"
#include "pgcover/verify.hpp"

#include <json.hpp>

#include <string>

namespace pgcover {

/// A cover or point-set file, before a Geometry has been built for it.
struct LoadedSet {
    int n = 0;
    FieldSpec spec;
    bool is_points = false;      // "points" file vs "hyperplanes" file
    std::vector<Vec> rows;       // coordinate vectors, FieldElement reps
};

nlohmann::json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const nlohmann::json& j);

std::string cover_to_json(const Geometry& g, const PartialCover& s);
std::string points_to_json(const Geometry& g, const PointSet& b);
std::string cover_to_text(const Geometry& g, const PartialCover& s);
std::string points_to_text(const Geometry& g, const PointSet& b);

/// Parses either format (JSON object or plain text with a `n p h modulus`
/// header) and either kind (hyperplanes or points). Malformed input
/// throws std::runtime_error with a position diagnostic.
LoadedSet parse_set(const std::string& content);

std::string recipe_to_json(const Geometry& g, const Recipe& r);
std::string report_to_json(const Geometry& g, const VerifyReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace pgcover
