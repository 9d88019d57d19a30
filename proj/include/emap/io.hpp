#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "emap/basin.hpp"
#include "emap/partition.hpp"
#include "emap/render.hpp"
#include "emap/tails.hpp"

namespace emap {

struct CurveSample {
    CurveId curve;
    double x = 0.0, y = 0.0;
};

std::string curve_name(CurveId c);

// CSV writers; numbers carry 17 significant digits, bit-exact layout.
void write_curves_csv(const std::string& path, const std::vector<CurveSample>& samples);
void write_polyline_csv(const std::string& path, const Polyline& poly);
void write_boundary_csv(const std::string& path, const std::vector<BoundarySample>& grid);

// Binary portable pixmap, magic P6, 8-bit, R=G=B.
void write_ppm(const std::string& path, const Raster& raster);

void write_text(const std::string& path, const std::string& text);
std::string read_file_bytes(const std::string& path);

// FNV-1a 64-bit digest, hex-encoded; used for the manifest output digests.
std::string fnv1a64_hex(const std::string& bytes);

struct Manifest {
    std::string command_line;
    double a = 0.0;
    Params params;
    std::string version = "emap 0.1.0";
    std::vector<std::string> outputs;
    std::map<std::string, std::string> stats;

    // JSON text with per-output digests; deterministic field order.
    std::string to_json() const;
};

// key=value configuration file (comments with '#').  Unknown keys rejected by
// the caller; this just parses.
std::map<std::string, std::string> parse_config(const std::string& text);

}  // namespace emap
