#include "conway/json_io.hpp"

#include "conway/error.hpp"

namespace conway {

Json to_json(const BigInt& v) {
    if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
    return Json(to_string(v));
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    fail(ErrorKind::Parse, "expected an integer in JSON");
}

Json to_json(const Vec2& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

Json to_json(const BQF& q) { return Json{{"a", to_json(q.a)}, {"b", to_json(q.b)}, {"c", to_json(q.c)}}; }

Json to_json(const RingElement& z) { return Json::array({to_json(z.x), to_json(z.y)}); }

Json to_json(const Mat2& m) {
    auto e = [&](const RingElement& z) { return m.ring() == Ring::Z ? to_json(z.x) : to_json(z); };
    return Json::array({Json::array({e(m.a), e(m.b)}), Json::array({e(m.c), e(m.d)})});
}

Json to_json(const Superbase& s) { return Json::array({to_json(s.v[0]), to_json(s.v[1]), to_json(s.v[2])}); }

Json to_json(const Divector& d) {
    return Json{{"color", color_name(d.color)}, {"u", to_json(d.u)}, {"v", to_json(d.v)}};
}

Json well_json(const Well& w) {
    return Json{{"kind", well_kind_name(w.kind)},
                {"u", to_json(w.u)},
                {"v", to_json(w.v)},
                {"w", to_json(w.w)},
                {"vectors", Json::array({to_json(w.pu), to_json(w.pv), to_json(w.pw)})},
                {"orientation", orientation_name(w.orientation)},
                {"steps", w.steps}};
}

Json river_json(const RiverPeriod& r) {
    Json edges = Json::array();
    for (const auto& e : r.edges) edges.push_back(Json{{"p", to_json(e.p)}, {"n", to_json(e.n)}});
    Json pos = Json::array(), neg = Json::array();
    for (const auto& v : r.positive_bank) pos.push_back(to_json(v));
    for (const auto& v : r.negative_bank) neg.push_back(to_json(v));
    return Json{{"period", r.edges.size()},
                {"edges", edges},
                {"positive_bank", pos},
                {"negative_bank", neg},
                {"automorph", to_json(r.automorph)}};
}

Json minimum_json(const MinimumReport& m) {
    return Json{{"value", to_json(m.mu)}, {"witness", to_json(m.witness)}, {"bound_ok", m.bound_ok}};
}

Json pell_json(const BigInt& d, const PellSolution& s) {
    return Json{{"d", to_json(d)},
                {"x", to_json(s.x)},
                {"y", to_json(s.y)},
                {"automorph", to_json(s.automorph)},
                {"period", s.period}};
}

Json classgroup_json(const ClassGroupTable& t) {
    Json classes = Json::array();
    for (const auto& c : t.classes) classes.push_back(Json::array({to_json(c.a), to_json(c.b), to_json(c.c)}));
    Json ambiguous = Json::object();
    for (int sigma : {2, 3}) {
        if (!is_diform_discriminant(sigma, t.delta)) continue;
        try {
            ambiguous[std::to_string(sigma)] = class_index(t, ambiguous_form(sigma, t.delta));
        } catch (const Error&) {
            // A not primitive for this sigma
        }
    }
    return Json{{"delta", to_json(t.delta)},
                {"h", t.classes.size()},
                {"classes", classes},
                {"table", t.table},
                {"principal_index", t.identity},
                {"A_class_index", ambiguous}};
}

Json diwell_json(const DiWell& w) {
    Json faces = Json::array(), vals = Json::array();
    for (const auto& f : w.source.faces) faces.push_back(to_json(f));
    for (const auto& v : w.values) vals.push_back(to_json(v));
    return Json{{"source", faces},
                {"values", vals},
                {"flat_edges", w.flat_edges},
                {"steps", w.steps},
                {"red_reduced", to_json(w.red_reduced)},
                {"blue_reduced", to_json(w.blue_reduced)}};
}

Json diriver_json(const DiRiver& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps) steps.push_back(Json{{"y0", to_json(s.y0)}, {"y1", to_json(s.y1)}, {"bend", s.bend}});
    return Json{{"period", r.steps.size()}, {"bends", r.bends}, {"steps", steps}, {"automorph", to_json(r.automorph)}};
}

Json cube_json(const CubeValues& c) {
    return Json{{"faces", Json{{"a", to_json(c.a)},
                               {"b", to_json(c.b)},
                               {"c", to_json(c.c)},
                               {"u", to_json(c.u)},
                               {"v", to_json(c.v)},
                               {"w", to_json(c.w)}}},
                {"z", to_json(c.z)},
                {"pattern", cube_pattern_name(c.pattern)}};
}

Json superbase_ball_json(const SuperbaseBall& b) {
    Json nodes = Json::array();
    for (const auto& s : b.nodes) nodes.push_back(to_json(s));
    return Json{{"superbases", nodes}, {"depths", b.depth}, {"adjacency", b.adjacency}};
}

Json coxeter_json(const CoxeterReport& c, const TransitivityReport& t) {
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(to_json(g));
    return Json{{"generators", gens},
                {"relations",
                 Json{{"involutions", c.involutions},
                      {"braid01", c.braid01},
                      {"commute02", c.commute02},
                      {"stabilizers", c.stabilizers}}},
                {"transitivity",
                 Json{{"radius", t.radius},
                      {"words", t.words},
                      {"elements", t.elements},
                      {"flags", t.flags},
                      {"injective", t.injective},
                      {"onto", t.onto}}}};
}

Json patch_json(const LayoutPatch& p) {
    Json verts = Json::array(), edges = Json::array(), faces = Json::array();
    for (const auto& v : p.vertices) verts.push_back(Json{{"depth", v.depth}, {"class", v.cls}});
    std::size_t river = 0;
    for (const auto& e : p.edges) {
        if (e.cls == "river") ++river;
        edges.push_back(Json{{"from", e.from},
                             {"to", e.to},
                             {"class", e.cls},
                             {"arrow", e.arrow},
                             {"faces", Json::array({e.face_low, e.face_high})}});
    }
    for (const auto& f : p.faces) faces.push_back(Json{{"face", f.key}, {"label", f.label}});
    return Json{{"geometry", geometry_name(p.geometry)},
                {"depth", p.depth},
                {"counts", Json{{"vertices", p.vertices.size()}, {"edges", p.edges.size()}, {"faces", p.faces.size()},
                                {"river_edges", river}}},
                {"vertices", verts},
                {"edges", edges},
                {"faces", faces}};
}

Json command_schema(const std::string& command) {
    static const Json schemas = {
        {"reduce",
         {{"form", "{a,b,c}"}, {"delta", "integer"}, {"classification", "string"},
          {"well", "{kind,u,v,w,vectors,orientation,steps} (positive-definite)"},
          {"reduced", "{a,b,c} (positive-definite)"},
          {"reduced_forms", "[{a,b,c}] (indefinite)"}}},
        {"river",
         {{"form", "{a,b,c}"}, {"delta", "integer"},
          {"river", "{period,edges:[{p,n}],positive_bank,negative_bank,automorph}"},
          {"reduced_forms", "[{a,b,c}]"}, {"mu", "{value,witness,bound_ok}"}}},
        {"pell", {{"d", "integer"}, {"x", "integer"}, {"y", "integer"}, {"automorph", "2x2"}, {"period", "integer"}}},
        {"classgroup",
         {{"delta", "integer"}, {"h", "integer"}, {"classes", "[[a,b,c]]"}, {"table", "[[index]]"},
          {"principal_index", "integer"}, {"A_class_index", "{sigma: index}"}}},
        {"diform",
         {{"sigma", "2|3"}, {"form", "{a,b,c}"}, {"delta", "integer"}, {"classification", "string"},
          {"red", "{a,b,c}"}, {"blue", "{a,b,c}"},
          {"well", "{source,values,flat_edges,steps,red_reduced,blue_reduced}"},
          {"river", "{period,bends,steps,automorph}"}, {"mu", "integer"}, {"witness", "divector"},
          {"bound_ok", "bool"}, {"exceptional", "bool"}}},
        {"hermitian",
         {{"ring", "g|e"}, {"form", "{a,gamma:[x,y],c}"}, {"delta", "integer"},
          {"cube", "{faces:{a,b,c,u,v,w},z,pattern} (g)"}, {"tetra", "{vectors,values} (e)"},
          {"mu", "integer"}, {"witness", "[[x,y],[x,y]]"}, {"bound_ok", "bool"}}},
        {"render", {{"geometry", "3inf|4inf|6inf"}, {"depth", "integer"}, {"counts", "{vertices,edges,faces,river_edges}"}, {"out", "path"}}},
        {"topograph", {{"superbases", "[[[x,y]x3]]"}, {"depths", "[integer]"}, {"adjacency", "[[index|-1]x3]"}}},
        {"coxeter", {{"generators", "[2x2]x3"}, {"relations", "{...bool}"}, {"transitivity", "{radius,words,elements,flags,injective,onto}"}}},
        {"error", {{"error", "code"}, {"message", "string"}}},
    };
    if (command.empty()) return schemas;
    if (!schemas.contains(command)) fail(ErrorKind::Parse, "no schema for command '" + command + "'");
    return schemas.at(command);
}

}  // namespace conway
