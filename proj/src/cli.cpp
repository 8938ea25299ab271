#include "conway/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "conway/error.hpp"
#include "conway/json_io.hpp"

namespace conway {

namespace {

std::vector<BigInt> parse_list(const std::string& s, std::size_t n, const char* what) {
    std::vector<BigInt> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_bigint(item));
    if (out.size() != n)
        fail(ErrorKind::Parse, std::string(what) + " needs " + std::to_string(n) + " comma-separated integers");
    return out;
}

BQF parse_bqf(const std::string& s) {
    auto v = parse_list(s, 3, "--form");
    return {v[0], v[1], v[2]};
}

Json cmd_reduce(const std::string& form) {
    BQF q = parse_bqf(form);
    Json j{{"command", "reduce"}, {"form", to_json(q)}, {"delta", to_json(discriminant(q))},
           {"classification", form_class_name(classify(q))}};
    switch (classify(q)) {
        case FormClass::PositiveDefinite: {
            Well w = find_well(q);
            j["well"] = well_json(w);
            j["reduced"] = to_json(gauss_reduced(w));
            break;
        }
        case FormClass::IndefiniteNondegenerate: {
            Json forms = Json::array();
            for (const auto& f : riverbends(q)) forms.push_back(to_json(f));
            j["reduced_forms"] = forms;
            break;
        }
        case FormClass::Degenerate:
            fail(ErrorKind::SquareOrInvalidDiscriminant, q.str() + " has square discriminant");
        default:
            fail(ErrorKind::Classification, q.str() + " is negative-definite");
    }
    return j;
}

Json cmd_river(const std::string& form) {
    BQF q = parse_bqf(form);
    RiverPeriod r = trace_river(q);
    Json forms = Json::array();
    for (const auto& f : riverbends(q, r)) forms.push_back(to_json(f));
    return Json{{"command", "river"},
                {"form", to_json(q)},
                {"delta", to_json(discriminant(q))},
                {"river", river_json(r)},
                {"reduced_forms", forms},
                {"mu", minimum_json(minimum_nonzero(q, r))}};
}

Json cmd_pell(const std::string& d) {
    BigInt dd = parse_bigint(d);
    Json j = pell_json(dd, pell_solve(dd));
    j.erase("d");
    Json out{{"command", "pell"}, {"d", to_json(dd)}};
    out.update(j);
    return out;
}

Json cmd_classgroup(const std::string& d) {
    Json out{{"command", "classgroup"}};
    out.update(classgroup_json(class_group(parse_bigint(d))));
    return out;
}

Json cmd_diform(int sigma, const std::string& form, bool want_well, bool want_river) {
    auto v = parse_list(form, 3, "--form");
    BQD q(sigma, v[0], v[1], v[2]);
    FormClass k = classify(q);
    Json j{{"command", "diform"}, {"sigma", sigma},
           {"form", Json{{"a", to_json(q.a)}, {"b", to_json(q.b)}, {"c", to_json(q.c)}}},
           {"delta", to_json(discriminant(q))}, {"classification", form_class_name(k)},
           {"red", to_json(q_red(q))}, {"blue", to_json(q_blue(q))}};
    if (want_well && want_river) fail(ErrorKind::Parse, "--reduce and --river are exclusive");
    if (!want_well && !want_river) {
        want_well = k == FormClass::PositiveDefinite;
        want_river = !want_well;
    }
    if (want_well) {
        j["well"] = diwell_json(diform_well(q));
    } else {
        DiRiver r = diform_river(q);
        j["river"] = diriver_json(r);
        j["mu"] = to_json(r.mu);
        j["witness"] = to_json(r.witness);
        j["bound_ok"] = r.bound_ok;
        j["exceptional"] = r.exceptional;
    }
    return j;
}

Json cmd_hermitian(const std::string& ring, const std::string& form, std::optional<long> box) {
    Ring r;
    if (ring == "g")
        r = Ring::Gauss;
    else if (ring == "e")
        r = Ring::Eisenstein;
    else
        fail(ErrorKind::Parse, "--ring must be g or e");
    auto v = parse_list(form, 4, "--form");
    BHF h(r, v[0], RingElement(r, v[1], v[2]), v[3]);
    BigInt delta = discriminant(h);
    Json j{{"command", "hermitian"}, {"ring", ring},
           {"form", Json{{"a", to_json(h.a)}, {"gamma", to_json(h.gamma)}, {"c", to_json(h.c)}}},
           {"delta", to_json(delta)}};
    if (r == Ring::Gauss) {
        j["cube"] = cube_json(cube_values(h, find_cubasis(standard_seed(r))));
    } else {
        Tetrabasis t = find_tetrabasis(standard_seed(r));
        Json vecs = Json::array(), vals = Json::array();
        for (const auto& x : t.v) {
            vecs.push_back(Json::array({to_json(x[0]), to_json(x[1])}));
            vals.push_back(to_json(evaluate(h, x)));
        }
        j["tetra"] = Json{{"vectors", vecs}, {"values", vals}};
    }
    if (delta > 0) {
        HermitianMinimum m = empirical_minimum(h, box.value_or(6));
        j["mu"] = to_json(m.mu);
        j["witness"] = Json::array({to_json(m.witness[0]), to_json(m.witness[1])});
        j["bound_ok"] = m.bound_ok;
    } else if (box) {
        fail(ErrorKind::Precondition, "--min-box needs a positive discriminant");
    }
    return j;
}

struct RenderResult {
    Json summary;
    std::string svg;
};

RenderResult cmd_render(const std::string& geometry, int depth, const std::string& form) {
    Geometry g = parse_geometry(geometry);
    std::optional<FormCoefficients> fc;
    if (!form.empty()) {
        auto v = parse_list(form, 3, "--form");
        fc = FormCoefficients{v[0], v[1], v[2]};
    }
    LayoutPatch p = layout(g, depth, fc);
    Json pj = patch_json(p);
    return {Json{{"command", "render"}, {"geometry", geometry}, {"depth", depth}, {"counts", pj["counts"]}},
            emit_svg(p)};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Topograph reduction toolkit", "conway"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_flag = false;
    long seed = 0;
    app.add_flag("--json", json_flag, "Emit JSON (always on)");
    app.add_option("--seed", seed, "Reserved; all algorithms are deterministic");

    std::string form, d, delta, ring, geometry = "3inf", outfile, dump_cmd;
    int sigma = 2, depth = 3, radius = 5;
    bool want_well = false, want_river = false;
    std::optional<long> box;

    auto* reduce = app.add_subcommand("reduce", "Well / reduced forms of a binary quadratic form");
    reduce->add_option("--form", form, "a,b,c")->required();
    auto* river = app.add_subcommand("river", "River period, riverbends and minimum of an indefinite form");
    river->add_option("--form", form, "a,b,c")->required();
    auto* pell = app.add_subcommand("pell", "Fundamental solution of x^2 - D y^2 = 1");
    pell->add_option("--d", d, "D")->required();
    auto* cg = app.add_subcommand("classgroup", "Class group of discriminant D");
    cg->add_option("--delta", delta, "D")->required();
    auto* di = app.add_subcommand("diform", "Binary quadratic diform a x^2 + b sqrt(s) x y + c y^2");
    di->add_option("--sigma", sigma, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
    di->add_option("--form", form, "a,b,c")->required();
    di->add_flag("--reduce", want_well, "Descend to the well");
    di->add_flag("--river", want_river, "Trace the river");
    auto* herm = app.add_subcommand("hermitian", "Binary Hermitian form over Z[i] or Z[w]");
    herm->add_option("--ring", ring, "g or e")->required();
    herm->add_option("--form", form, "a,gamma_x,gamma_y,c")->required();
    herm->add_option("--min-box", box, "Coordinate bound for the minimum scan");
    auto* render = app.add_subcommand("render", "SVG patch of a topograph");
    render->add_option("--geometry", geometry, "3inf, 4inf or 6inf");
    render->add_option("--depth", depth, "Patch depth (0..9)");
    render->add_option("--form", form, "a,b,c");
    render->add_option("--out", outfile, "SVG path; '-' or omitted writes the SVG to stdout");
    auto* topo = app.add_subcommand("topograph", "Ball of superbases around the standard one");
    topo->add_option("--depth", depth, "BFS depth");
    auto* cox = app.add_subcommand("coxeter", "Generators and simple transitivity check");
    cox->add_option("--radius", radius, "Word length bound (0..8)");
    auto* dump = app.add_subcommand("dump", "Output schema of every command");
    dump->add_option("command", dump_cmd, "Restrict to one command");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        Json j;
        if (reduce->parsed()) {
            j = cmd_reduce(form);
        } else if (river->parsed()) {
            j = cmd_river(form);
        } else if (pell->parsed()) {
            j = cmd_pell(d);
        } else if (cg->parsed()) {
            j = cmd_classgroup(delta);
        } else if (di->parsed()) {
            j = cmd_diform(sigma, form, want_well, want_river);
        } else if (herm->parsed()) {
            j = cmd_hermitian(ring, form, box);
        } else if (render->parsed()) {
            RenderResult r = cmd_render(geometry, depth, form);
            if (outfile.empty() || outfile == "-") {
                out << r.svg;
                return 0;
            }
            std::ofstream f(outfile, std::ios::binary);
            if (!f) fail(ErrorKind::Precondition, "cannot write " + outfile);
            f << r.svg;
            j = r.summary;
            j["out"] = outfile;
        } else if (topo->parsed()) {
            j = Json{{"command", "topograph"}, {"depth", depth}};
            j.update(superbase_ball_json(superbase_ball(depth)));
        } else if (cox->parsed()) {
            j = Json{{"command", "coxeter"}};
            j.update(coxeter_json(coxeter_generators(), verify_simple_transitivity(radius)));
        } else if (dump->parsed()) {
            j = Json{{"command", "dump"}, {"schema", command_schema(dump_cmd)}};
        }
        out << j.dump() << "\n";
        return 0;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) {
            err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
            return 2;
        }
        err << Json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

}  // namespace conway
