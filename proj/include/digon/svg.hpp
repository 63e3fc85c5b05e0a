#pragma once

#include <string>

#include "digon/family.hpp"

namespace digon {

struct RenderLayers {
    bool circles = true;
    bool digons = true;
    bool graph = true;
};

// Deterministic standalone SVG: circles stroked black, lens faces filled in
// one color and lunes in another, graph edges drawn straight between centers.
// The viewBox is the family bounding box plus a 10% margin.
std::string render_svg(const CircleFamily& fam, const RenderLayers& layers);

}  // namespace digon
