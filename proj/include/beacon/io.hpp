#pragma once

#include "beacon/attraction.hpp"
#include "beacon/decomposition.hpp"
#include "beacon/spiral.hpp"
#include "beacon/synthesis.hpp"
#include "beacon/verifier.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace beacon::io {

using nlohmann::json;

inline constexpr const char* kToolVersion = "beacon-route 1.0.0";

// Integers fitting in int64 become JSON numbers, larger ones decimal strings.
json integer_json(const mpz_class& z);
mpz_class integer_from_json(const json& j);

// [xnum, xden, ynum, yden]
json point_json(const Point& p);
// Accepts [xnum, xden, ynum, yden] or [x, y] with integer shorthand.
Point point_from_json(const json& j);

json points_json(const std::vector<Point>& pts);
// Accepts a list of points or {"beacons": [...]} with points or {"point": ...} objects.
std::vector<Point> points_from_json(const json& j);

json polygon_json(const OrthoPolygon& poly);
std::vector<Point> polygon_vertices_from_json(const json& j);

json path_json(const AttractionPath& path);
json decomposition_json(const Decomposition& d);
json trace_json(const std::vector<ReductionStep>& trace);
json budget_json(const BudgetReport& b);
json beacons_json(const BeaconSet& b);
json report_json(const VerificationReport& r);
json spiral_sections_json(const SpiralGeometry& g);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const json& j);

// Largest bit length allowed for any numerator or denominator; BEACON_ROUTE_MAX_BITS, default 256.
size_t max_coordinate_bits();
void check_coordinate_bits(const std::vector<Point>& pts);

struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    uint64_t seed = 0;
    std::map<std::string, std::string> flags;
    std::string tool_version = kToolVersion;
    std::string output_digest;
};
// FNV-1a 64, lowercase hex.
std::string fnv1a_hex(const std::string& bytes);
json manifest_json(const RunManifest& m);

struct Scene {
    const OrthoPolygon* polygon = nullptr;
    const Decomposition* decomposition = nullptr;
    // rectangle id -> shading group (e.g. reduction step); unlisted rectangles unshaded
    std::map<int, int> shading;
    std::vector<Point> beacons;
    std::vector<std::vector<Point>> paths;
    bool show_tree = false;
};

std::string render_svg(const Scene& scene);
void emit_svg(const Scene& scene, const std::string& path);

}  // namespace beacon::io
