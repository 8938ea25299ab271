#include "conway/render.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <set>

#include "conway/bqf.hpp"
#include "conway/diform.hpp"
#include "conway/error.hpp"
#include "conway/reduction.hpp"
#include "conway/topograph.hpp"

namespace conway {

const char* geometry_name(Geometry g) {
    switch (g) {
        case Geometry::G3: return "3inf";
        case Geometry::G4: return "4inf";
        case Geometry::G6: return "6inf";
    }
    return "?";
}

Geometry parse_geometry(const std::string& s) {
    if (s == "3inf") return Geometry::G3;
    if (s == "4inf") return Geometry::G4;
    if (s == "6inf") return Geometry::G6;
    fail(ErrorKind::Parse, "unknown geometry '" + s + "' (expected 3inf, 4inf or 6inf)");
}

int geometry_valence(Geometry g) { return g == Geometry::G3 ? 3 : g == Geometry::G4 ? 4 : 6; }

std::string format_label(const BigInt& v) {
    std::string s = to_string(abs(v));
    std::string sg = v < 0 ? "-" : "";
    if (s.size() <= 12) return sg + s;
    return sg + s.substr(0, 1) + "." + s.substr(1, 3) + "e+" + std::to_string(s.size() - 1);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// Vertices of the (3, inf) geometry: superbases; face k of a vertex sits between edges k-1 and k.
struct ConwayGeometry {
    using Node = Superbase;
    std::optional<BQF> form;

    Node root() const { return Superbase::standard(); }
    int valence() const { return 3; }
    Node neighbor(const Node& n, int k) const { return conway::neighbor(n, k); }
    std::string key(const Node& n) const { return n.str(); }
    std::string face_key(const Node& n, int k) const { return lax(n.v[static_cast<std::size_t>((k % 3 + 3) % 3)]).str(); }
    std::optional<BigInt> value(const Node& n, int k) const {
        if (!form) return std::nullopt;
        return evaluate(*form, n.v[static_cast<std::size_t>((k % 3 + 3) % 3)]);
    }
};

struct DiformGeometry {
    using Node = Pinwheel;
    int sigma = 2;
    std::optional<BQD> form;

    Node root() const { return pinwheel_from(sigma, Divector::red(1, 0), Divector::blue(0, 1)); }
    int valence() const { return 2 * sigma; }
    Node neighbor(const Node& n, int k) const { return pinwheel_neighbor(n, static_cast<std::size_t>(k)); }
    std::string key(const Node& n) const {
        std::string s;
        for (const auto& f : n.key()) s += f.str();
        return s;
    }
    const Divector& face(const Node& n, int k) const {
        int q = valence();
        return n.faces[static_cast<std::size_t>((k % q + q) % q)];
    }
    std::string face_key(const Node& n, int k) const { return lax(face(n, k)).str(); }
    std::optional<BigInt> value(const Node& n, int k) const {
        if (!form) return std::nullopt;
        return evaluate(*form, face(n, k));
    }
};

struct Pending {
    int depth;
    double lo, hi, angle;
    int parent;  // vertex index, -1 for the root
    std::string low_face, high_face;
};

template <class G>
LayoutPatch build(const G& geo, Geometry g, int depth, const std::string& well_key) {
    LayoutPatch patch;
    patch.geometry = g;
    patch.depth = depth;
    if (depth == 0) return patch;
    const int q = geo.valence();
    auto radius = [](int d) { return d == 0 ? 0.0 : 0.92 * (1.0 - 1.0 / (1.0 + d)); };
    std::set<std::string> seen_faces;
    auto add_face = [&](const std::string& key, double x, double y, const std::optional<BigInt>& val) {
        if (!seen_faces.insert(key).second) return;
        PlacedFace f;
        f.key = key;
        f.x = x;
        f.y = y;
        if (val) f.label = format_label(*val);
        patch.faces.push_back(f);
    };

    struct Item {
        typename G::Node node;
        Pending info;
    };
    std::deque<Item> todo;
    todo.push_back({geo.root(), {0, 0.0, 2 * kPi, 0.0, -1, "", ""}});
    while (!todo.empty()) {
        Item it = std::move(todo.front());
        todo.pop_front();
        const auto& n = it.node;
        const Pending& p = it.info;
        int vid = static_cast<int>(patch.vertices.size());
        PlacedVertex v;
        v.depth = p.depth;
        v.x = radius(p.depth) * std::cos(p.angle);
        v.y = radius(p.depth) * std::sin(p.angle);
        v.cls = (!well_key.empty() && geo.key(n) == well_key) ? "well" : "vertex";
        patch.vertices.push_back(v);

        // Outward edges in increasing angle, each with its angular sector.
        std::vector<int> order;
        int dir = 1;
        std::vector<std::pair<double, double>> sectors;
        if (p.parent < 0) {
            for (int k = 0; k < q; ++k) {
                order.push_back(k);
                double c = kPi / 2 + 2 * kPi * k / q;
                sectors.push_back({c - kPi / q, c + kPi / q});
            }
        } else {
            int j = -1;
            for (int k = 0; k < q && j < 0; ++k) {
                std::set<std::string> pair{geo.face_key(n, k), geo.face_key(n, k + 1)};
                if (pair == std::set<std::string>{p.low_face, p.high_face}) j = k;
            }
            if (j < 0) fail(ErrorKind::InvariantViolation, "child vertex does not contain its parent edge");
            dir = geo.face_key(n, j + 1) == p.low_face ? 1 : -1;
            double w = (p.hi - p.lo) / (q - 1);
            for (int i = 1; i < q; ++i) {
                order.push_back(((j + i * dir) % q + q) % q);
                sectors.push_back({p.lo + (i - 1) * w, p.lo + i * w});
            }
        }
        std::vector<std::pair<double, double>> ends;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int e = order[i];
            double ang = (sectors[i].first + sectors[i].second) / 2;
            double r = radius(p.depth + 1);
            double ex = r * std::cos(ang), ey = r * std::sin(ang);
            ends.push_back({ex, ey});
            std::string high = dir > 0 ? geo.face_key(n, e + 1) : geo.face_key(n, e);
            std::string low = dir > 0 ? geo.face_key(n, e) : geo.face_key(n, e + 1);
            auto child = geo.neighbor(n, e);
            PlacedEdge edge;
            edge.from = vid;
            edge.x1 = v.x;
            edge.y1 = v.y;
            edge.x2 = ex;
            edge.y2 = ey;
            edge.face_low = low;
            edge.face_high = high;
            edge.cls = "edge";
            auto vl = geo.value(n, e), vh = geo.value(n, e + 1);
            if (vl && vh) {
                // End values: the face before the edge at this vertex and its mirror at the child.
                BigInt here = *geo.value(n, e - 1);
                int cj = -1;
                for (int k = 0; k < q && cj < 0; ++k) {
                    std::set<std::string> pair{geo.face_key(child, k), geo.face_key(child, k + 1)};
                    if (pair == std::set<std::string>{low, high}) cj = k;
                }
                BigInt there = *geo.value(child, cj - 1);
                if ((sign(*vl) > 0) != (sign(*vh) > 0))
                    edge.cls = "river";
                if (here == there) {
                    if (edge.cls == "edge") edge.cls = "flat";
                } else {
                    edge.arrow = there > here ? 1 : -1;
                }
            }
            if (p.depth + 1 < depth) {
                edge.to = static_cast<int>(patch.vertices.size() + todo.size());
                todo.push_back({child, {p.depth + 1, sectors[i].first, sectors[i].second, ang, vid, low, high}});
            }
            patch.edges.push_back(edge);
        }
        // Faces between consecutive outward edges; the root also closes the cycle.
        std::size_t m = order.size();
        std::size_t count = p.parent < 0 ? m : m - 1;
        for (std::size_t i = 0; i < count; ++i) {
            int e = order[i];
            int k = dir > 0 ? e + 1 : e;
            auto a = ends[i], b = ends[(i + 1) % m];
            double cx = (v.x + a.first + b.first) / 3, cy = (v.y + a.second + b.second) / 3;
            add_face(geo.face_key(n, k), cx, cy, geo.value(n, k));
        }
    }
    return patch;
}

}  // namespace

LayoutPatch layout(Geometry g, int depth, const std::optional<FormCoefficients>& form) {
    if (depth < 0 || depth > 9) fail(ErrorKind::Budget, "layout depth must lie in 0..9");
    if (g == Geometry::G3) {
        ConwayGeometry geo;
        std::string well;
        if (form) {
            geo.form = BQF(form->a, form->b, form->c);
            if (classify(*geo.form) == FormClass::PositiveDefinite) well = find_well(*geo.form).superbase.str();
        }
        return build(geo, g, depth, well);
    }
    DiformGeometry geo;
    geo.sigma = g == Geometry::G4 ? 2 : 3;
    std::string well;
    if (form) {
        geo.form = BQD(geo.sigma, form->a, form->b, form->c);
        if (classify(*geo.form) == FormClass::PositiveDefinite) well = geo.key(diform_well(*geo.form).source);
    }
    return build(geo, g, depth, well);
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

constexpr double kSize = 800.0;
constexpr double kScale = 380.0;

std::string px(double x) { return fmt(kSize / 2 + kScale * x); }
std::string py(double y) { return fmt(kSize / 2 - kScale * y); }

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string emit_svg(const LayoutPatch& patch) {
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    bool empty = patch.vertices.empty();
    if (!empty) {
        s += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
             "<path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n";
        s += "<style>.canvas{fill:#ffffff}.edge{stroke:#444444;stroke-width:1.5}.river{stroke:#1f6fd1;stroke-width:4}"
             ".flat{stroke:#444444;stroke-width:1.5;stroke-dasharray:4 3}.vertex{fill:#444444}.well{fill:#d12f1f}"
             ".face{font-family:sans-serif;font-size:12px;text-anchor:middle;dominant-baseline:middle}</style>\n";
    }
    s += "<rect class=\"canvas\" x=\"0\" y=\"0\" width=\"800\" height=\"800\"/>\n";
    if (!empty) {
        s += "<g id=\"edges\">\n";
        for (const auto& e : patch.edges) {
            bool rev = e.arrow < 0;
            double x1 = rev ? e.x2 : e.x1, y1 = rev ? e.y2 : e.y1;
            double x2 = rev ? e.x1 : e.x2, y2 = rev ? e.y1 : e.y2;
            s += "<line class=\"" + e.cls + "\" x1=\"" + px(x1) + "\" y1=\"" + py(y1) + "\" x2=\"" + px(x2) + "\" y2=\"" +
                 py(y2) + "\"";
            if (e.arrow != 0) s += " marker-end=\"url(#arrow)\"";
            s += "/>\n";
        }
        s += "</g>\n<g id=\"vertices\">\n";
        for (const auto& v : patch.vertices)
            s += "<circle class=\"" + v.cls + "\" cx=\"" + px(v.x) + "\" cy=\"" + py(v.y) + "\" r=\"" +
                 (v.cls == "well" ? "6" : "3") + "\"/>\n";
        s += "</g>\n<g id=\"faces\">\n";
        for (const auto& f : patch.faces) {
            s += "<text class=\"face\" x=\"" + px(f.x) + "\" y=\"" + py(f.y) + "\" data-face=\"" + escape(f.key) + "\">" +
                 escape(f.label) + "</text>\n";
        }
        s += "</g>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace conway
