#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "digon/family.hpp"

namespace digon {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk family document: {"circles":[{"x":..,"y":..,"r":..},...],"tol":..}
// with tol optional.
struct FamilyDocument {
    std::vector<Circle> circles;
    Tolerance tol;
};

FamilyDocument parse_family_document(const std::string& text);
nlohmann::json family_document_to_json(const FamilyDocument& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// 64-bit FNV-1a, used for content-addressed counterexample files.
std::string content_hash_hex(const std::string& content);

}  // namespace digon
