#include "digon/io.hpp"

#include <fstream>
#include <sstream>

namespace digon {

FamilyDocument parse_family_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("circles") || !j["circles"].is_array())
        throw ParseError("family document needs a \"circles\" array");

    FamilyDocument doc;
    if (j.contains("tol")) {
        if (!j["tol"].is_number()) throw ParseError("\"tol\" must be a number");
        doc.tol.eps = j["tol"].get<double>();
        if (!(doc.tol.eps > 0.0) || !(doc.tol.eps < 1e-3))
            throw ParseError("\"tol\" must lie in (0, 1e-3)");
    }
    for (const auto& item : j["circles"]) {
        if (!item.is_object() || !item.contains("x") || !item.contains("y") ||
            !item.contains("r") || !item["x"].is_number() || !item["y"].is_number() ||
            !item["r"].is_number())
            throw ParseError("each circle needs numeric fields x, y, r");
        Circle c{{item["x"].get<double>(), item["y"].get<double>()}, item["r"].get<double>()};
        if (!std::isfinite(c.center.x) || !std::isfinite(c.center.y) ||
            !std::isfinite(c.radius) || !(c.radius > 0.0))
            throw ParseError("circle coordinates must be finite with positive radius");
        doc.circles.push_back(c);
    }
    if (doc.circles.size() < 2) throw ParseError("a family needs at least two circles");
    return doc;
}

nlohmann::json family_document_to_json(const FamilyDocument& doc) {
    nlohmann::json j;
    j["circles"] = nlohmann::json::array();
    for (const Circle& c : doc.circles)
        j["circles"].push_back({{"x", c.center.x}, {"y", c.center.y}, {"r", c.radius}});
    j["tol"] = doc.tol.eps;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::string content_hash_hex(const std::string& content) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : content) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace digon
