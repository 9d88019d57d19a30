#include "emap/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace emap {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_or_throw(const std::string& path, const std::string& bytes) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw domain_error("cannot open for write: " + path);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!os) throw domain_error("write failed: " + path);
}

}  // namespace

std::string curve_name(CurveId c) {
    const char* kind = c.kind == CurveId::Kind::Zeta ? "zeta" : "eta";
    return kind + std::to_string(c.index);
}

void write_curves_csv(const std::string& path, const std::vector<CurveSample>& samples) {
    std::ostringstream os;
    os << "curve,x,y\n";
    for (const auto& s : samples)
        os << curve_name(s.curve) << ',' << g17(s.x) << ',' << g17(s.y) << '\n';
    write_or_throw(path, os.str());
}

void write_polyline_csv(const std::string& path, const Polyline& poly) {
    std::ostringstream os;
    os << "x,y,level,param\n";
    for (const auto& v : poly.pts)
        os << g17(v.z.real()) << ',' << g17(v.z.imag()) << ',' << v.level << ','
           << g17(v.param) << '\n';
    write_or_throw(path, os.str());
}

void write_boundary_csv(const std::string& path, const std::vector<BoundarySample>& grid) {
    std::ostringstream os;
    os << "angle_num,angle_den,x,y\n";
    for (const auto& g : grid)
        os << g.angle.num.str() << ',' << g.angle.den.str() << ','
           << g17(g.z.real()) << ',' << g17(g.z.imag()) << '\n';
    write_or_throw(path, os.str());
}

void write_ppm(const std::string& path, const Raster& raster) {
    std::ostringstream os;
    os << "P6\n" << raster.width << ' ' << raster.height << "\n255\n";
    std::string bytes = os.str();
    bytes.reserve(bytes.size() + raster.pix.size() * 3);
    for (std::uint8_t v : raster.pix) {
        bytes.push_back(static_cast<char>(v));
        bytes.push_back(static_cast<char>(v));
        bytes.push_back(static_cast<char>(v));
    }
    write_or_throw(path, bytes);
}

void write_text(const std::string& path, const std::string& text) {
    write_or_throw(path, text);
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw domain_error("cannot open for read: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string Manifest::to_json() const {
    nlohmann::ordered_json j;
    j["command_line"] = command_line;
    j["a"] = a;
    j["params"] = {{"a", params.a}, {"R", params.R}, {"p_a", params.p_a}, {"q_a", params.q_a}};
    j["version"] = version;
    nlohmann::ordered_json outs = nlohmann::ordered_json::array();
    for (const auto& path : outputs) {
        const std::string bytes = read_file_bytes(path);
        outs.push_back({{"path", path},
                        {"bytes", bytes.size()},
                        {"fnv1a64", fnv1a64_hex(bytes)}});
    }
    j["outputs"] = outs;
    nlohmann::ordered_json st = nlohmann::ordered_json::object();
    for (const auto& [k, v] : stats) st[k] = v;
    j["stats"] = st;
    return j.dump(2) + "\n";
}

std::map<std::string, std::string> parse_config(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) out[key] = val;
    }
    return out;
}

}  // namespace emap
