#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conway/bigint.hpp"

namespace conway {

// (3, inf): Conway topograph; (4, inf), (6, inf): diform topographs for sigma = 2, 3.
enum class Geometry { G3, G4, G6 };
const char* geometry_name(Geometry g);
Geometry parse_geometry(const std::string& s);
int geometry_valence(Geometry g);

struct PlacedVertex {
    double x = 0, y = 0;
    int depth = 0;
    std::string cls;  // "vertex" or "well"
};

struct PlacedEdge {
    int from = -1;
    int to = -1;  // -1: the far vertex lies outside the patch
    double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    std::string cls;  // "edge", "river" or "flat"
    int arrow = 0;    // +1 toward (x2, y2), -1 toward (x1, y1), 0 none
    std::string face_low, face_high;  // keys of the flanking faces
};

struct PlacedFace {
    std::string key;
    double x = 0, y = 0;
    std::string label;  // empty without a form
};

struct LayoutPatch {
    Geometry geometry = Geometry::G3;
    int depth = 0;
    std::vector<PlacedVertex> vertices;
    std::vector<PlacedEdge> edges;
    std::vector<PlacedFace> faces;
};

// Coefficients (a, b, c) of a BQF for G3, of a BQD a x^2 + b sqrt(s) x y + c y^2 otherwise.
struct FormCoefficients {
    BigInt a, b, c;
};

// depth 0 is the empty patch; depth k places every vertex within distance k - 1 of the root.
LayoutPatch layout(Geometry g, int depth, const std::optional<FormCoefficients>& form = std::nullopt);
std::string emit_svg(const LayoutPatch& patch);
// Decimal string, or d.ddde+N when longer than 12 digits.
std::string format_label(const BigInt& v);

}  // namespace conway
