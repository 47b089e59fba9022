// beacon-route: command-line front end for the beacon routing library.

#include "beacon/attraction.hpp"
#include "beacon/decomposition.hpp"
#include "beacon/io.hpp"
#include "beacon/spiral.hpp"
#include "beacon/synthesis.hpp"
#include "beacon/verifier.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace beacon;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Options {
    std::string polygon_path;
    std::string beacons_path;
    std::string out;
    std::string svg;
    std::string p, q;
    std::string lengths;
    uint64_t seed = 1;
    size_t count = 100;
    int max_n = 40;
    size_t samples = 50;
    int sections = 1;
    bool require_local = true;
    bool perturb = false;
    bool no_check = false;
    bool allow_large = false;
};

Coord parse_rational(const std::string& s) {
    Coord c;
    if (s.empty() || c.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational \"" + s + "\"");
    if (c.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + s + "\"");
    c.canonicalize();
    return c;
}

Point parse_point(const std::string& s) {
    size_t comma = s.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "point must be x,y: \"" + s + "\"");
    return Point(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
}

OrthoPolygon load_polygon(const std::string& path) {
    std::vector<Point> v = io::polygon_vertices_from_json(io::read_json_file(path));
    io::check_coordinate_bits(v);
    return validate_polygon(std::move(v));
}

io::RunManifest manifest_for(const std::string& command, const Options& o) {
    io::RunManifest m;
    m.command = command;
    if (!o.polygon_path.empty()) m.inputs.push_back(o.polygon_path);
    if (!o.beacons_path.empty()) m.inputs.push_back(o.beacons_path);
    m.seed = o.seed;
    m.flags["require_local"] = o.require_local ? "true" : "false";
    return m;
}

// Attaches the manifest (digest over the payload) and writes to --out or stdout.
void emit(json payload, io::RunManifest m, const Options& o) {
    m.output_digest = io::fnv1a_hex(payload.dump());
    payload["manifest"] = io::manifest_json(m);
    std::string text = io::dump(payload);
    if (o.out.empty())
        std::cout << text;
    else
        io::write_text_file(o.out, text);
}

int cmd_validate(const Options& o) {
    std::vector<Point> v = io::polygon_vertices_from_json(io::read_json_file(o.polygon_path));
    io::check_coordinate_bits(v);
    json out;
    try {
        if (o.perturb) {
            OrthoPolygon base = validate_orthogonal(v);
            v = perturb_to_general_position(base.vertices());
        }
        OrthoPolygon poly = validate_polygon(v);
        out = {{"valid", true}, {"n", poly.size()}, {"reflex", poly.reflex_count()}, {"polygon", io::polygon_json(poly)}};
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InternalInconsistency || e.code() == ErrorCode::PerturbationFailure) throw;
        out = {{"valid", false}, {"error", error_code_name(e.code())}, {"message", e.what()}};
    }
    io::RunManifest m = manifest_for("validate", o);
    m.flags["perturb"] = o.perturb ? "true" : "false";
    bool ok = out["valid"].get<bool>();
    emit(out, m, o);
    return ok ? kOk : kCheckFailed;
}

int cmd_decompose(const Options& o) {
    OrthoPolygon poly = load_polygon(o.polygon_path);
    Decomposition d = vertical_decomposition(poly);
    if (!o.svg.empty()) {
        io::Scene scene;
        scene.polygon = &d.polygon();
        scene.decomposition = &d;
        scene.show_tree = true;
        io::emit_svg(scene, o.svg);
    }
    emit(io::decomposition_json(d), manifest_for("decompose", o), o);
    return kOk;
}

int cmd_attract(const Options& o) {
    OrthoPolygon poly = load_polygon(o.polygon_path);
    Point p = parse_point(o.p), q = parse_point(o.q);
    AttractionPath path = attraction_path(poly, p, q);
    if (!o.svg.empty()) {
        io::Scene scene;
        scene.polygon = &poly;
        scene.beacons = {q};
        scene.paths = {path.polyline()};
        io::emit_svg(scene, o.svg);
    }
    io::RunManifest m = manifest_for("attract", o);
    m.flags["p"] = o.p;
    m.flags["q"] = o.q;
    emit(io::path_json(path), m, o);
    return kOk;
}

io::Scene synthesis_scene(const Decomposition& d, const SynthesisResult& res) {
    io::Scene scene;
    scene.polygon = &d.polygon();
    scene.decomposition = &d;
    for (size_t s = 0; s < res.trace.size(); ++s)
        for (int r : res.trace[s].removed) scene.shading[r] = static_cast<int>(s);
    scene.beacons = res.beacons.points();
    return scene;
}

json synthesis_payload(const OrthoPolygon& poly, const SynthesisResult& res, const BudgetReport& budget) {
    // Readable both as a polygon file and as a beacons file.
    return json{{"n", poly.size()},
                {"vertices", io::points_json(poly.vertices())},
                {"beacons", io::beacons_json(res.beacons)},
                {"trace", io::trace_json(res.trace)},
                {"budget", io::budget_json(budget)},
                {"epsilon", to_string(res.epsilon)}};
}

int cmd_synthesize(const Options& o) {
    OrthoPolygon poly = load_polygon(o.polygon_path);
    Decomposition d = vertical_decomposition(poly);
    SynthesisResult res = synthesize(d, compute_epsilon(poly));
    BudgetReport budget = check_budget(res.trace, poly.size());
    if (!o.svg.empty()) io::emit_svg(synthesis_scene(d, res), o.svg);
    emit(synthesis_payload(poly, res, budget), manifest_for("synthesize", o), o);
    return budget.ok() ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o) {
    OrthoPolygon poly = load_polygon(o.polygon_path);
    std::vector<Point> beacons = io::points_from_json(io::read_json_file(o.beacons_path));
    io::check_coordinate_bits(beacons);
    Decomposition d = vertical_decomposition(poly);
    std::vector<Point> samples = sample_points(d, o.seed, o.samples);
    VerificationReport rep = verify_routing_set(d, beacons, samples, o.require_local);
    io::RunManifest m = manifest_for("verify", o);
    m.flags["samples"] = std::to_string(o.samples);
    json out = io::report_json(rep);
    out["beacon_count"] = beacons.size();
    out["sample_count"] = samples.size();
    emit(out, m, o);
    return rep.failures.empty() ? kOk : kCheckFailed;
}

std::vector<mpz_class> parse_lengths(const std::string& s) {
    std::vector<mpz_class> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        mpz_class z;
        if (tok.empty() || z.set_str(tok, 10) != 0) throw Error(ErrorCode::ParseError, "bad length \"" + tok + "\"");
        out.push_back(z);
    }
    return out;
}

int cmd_spiral(const Options& o) {
    if (o.sections > 3 && !o.allow_large)
        throw Error(ErrorCode::CoordinateTooLarge, "more than 3 sections needs --allow-large");
    SpiralSpec spec = o.lengths.empty() ? default_spiral(o.sections) : SpiralSpec{o.sections, parse_lengths(o.lengths)};
    SpiralGeometry g = generate_spiral(spec, !o.no_check);
    io::check_coordinate_bits(g.polygon.vertices());
    Decomposition d = vertical_decomposition(g.polygon);
    SynthesisResult res = synthesize(d, compute_epsilon(g.polygon));
    BudgetReport budget = check_budget(res.trace, g.polygon.size());

    json cert = json::array();
    LengthReport lengths = check_length_inequality(spec);
    bool all_ok = budget.ok();
    for (int i = 1; i <= spec.r; ++i) {
        RegionResult region = region_between_lines(g, i);
        TerminalKind below = witness_stuck(g, i, true).terminal.kind;
        TerminalKind above = witness_stuck(g, i, false).terminal.kind;
        TerminalKind indet = witness_indeterminate(g, i).kind;
        bool ok = lengths.holds[static_cast<size_t>(i - 1)] && region.single_point && below != TerminalKind::Reached &&
                  below != TerminalKind::Indeterminate && above == TerminalKind::Reached &&
                  indet == TerminalKind::Indeterminate;
        all_ok = all_ok && ok;
        cert.push_back(json{{"section", i},
                            {"length_inequality", static_cast<bool>(lengths.holds[static_cast<size_t>(i - 1)])},
                            {"region_single_point", region.single_point},
                            {"region", io::points_json(region.vertices)},
                            {"witness_below", terminal_name(below)},
                            {"witness_above", terminal_name(above)},
                            {"witness_at_reflex", terminal_name(indet)},
                            {"ok", ok}});
    }
    if (!o.svg.empty()) {
        io::Scene scene = synthesis_scene(d, res);
        if (spec.r >= 1) scene.paths.push_back(witness_stuck(g, 1, true).polyline());
        io::emit_svg(scene, o.svg);
    }
    json out = synthesis_payload(g.polygon, res, budget);
    out["sections"] = io::spiral_sections_json(g);
    out["certificate"] = cert;
    io::RunManifest m = manifest_for("spiral", o);
    m.flags["sections"] = std::to_string(o.sections);
    if (!o.lengths.empty()) m.flags["lengths"] = o.lengths;
    emit(out, m, o);
    return all_ok ? kOk : kCheckFailed;
}

int cmd_corpus(const Options& o) {
    json polys = json::array();
    size_t budget_violations = 0, routing_failures = 0, non_local = 0;
    std::map<std::string, int> cases;
    for (const CorpusEntry& e : generate_corpus(o.count, o.seed, 8, o.max_n)) {
        Decomposition d = vertical_decomposition(e.polygon);
        Coord eps = compute_epsilon(e.polygon);
        SynthesisResult res = synthesize(d, eps);
        BudgetReport budget = check_budget(res.trace, e.polygon.size());
        VerificationReport rep =
            verify_routing_set(d, res.beacons.points(), sample_points(d, e.seed, o.samples, eps), o.require_local);
        budget_violations += budget.violating_steps.size() + (budget.global_ok ? 0 : 1);
        routing_failures += rep.failures.size();
        if (!rep.all_local) ++non_local;
        for (const auto& [name, k] : budget.histogram) cases[name] += k;
        polys.push_back(json{{"seed", e.seed},
                             {"n", e.n},
                             {"beacons", res.beacons.size()},
                             {"bound", budget.bound},
                             {"budget_ok", budget.ok()},
                             {"pairs_checked", rep.pairs_checked},
                             {"failures", rep.failures.size()},
                             {"all_local", rep.all_local}});
    }
    json out{{"count", o.count},
             {"max_n", o.max_n},
             {"budget_violations", budget_violations},
             {"routing_failures", routing_failures},
             {"non_local_polygons", non_local},
             {"cases", cases},
             {"polygons", polys}};
    io::RunManifest m = manifest_for("corpus", o);
    m.flags["count"] = std::to_string(o.count);
    m.flags["max_n"] = std::to_string(o.max_n);
    m.flags["samples"] = std::to_string(o.samples);
    emit(out, m, o);
    return budget_violations == 0 && routing_failures == 0 ? kOk : kCheckFailed;
}

bool is_usage_error(ErrorCode c) {
    switch (c) {
    case ErrorCode::NotOrthogonal:
    case ErrorCode::NotSimple:
    case ErrorCode::GeneralPositionViolation:
    case ErrorCode::TooFewVertices:
    case ErrorCode::EmptyInput:
    case ErrorCode::PointOutsidePolygon:
    case ErrorCode::SpecInvariantViolated:
    case ErrorCode::SectionOutOfRange:
    case ErrorCode::CoordinateTooLarge:
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
        return true;
    default:
        return false;
    }
}

std::string write_state_dump(const std::string& command, const std::string& what) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::path dir = fs::temp_directory_path(ec);
    if (ec) dir = ".";
    fs::path file = dir / ("beacon-route-state-" + io::fnv1a_hex(command + what) + ".txt");
    try {
        io::write_text_file(file.string(), "command: " + command + "\n" + what + "\n");
    } catch (const Error&) {
        return "(unavailable)";
    }
    return file.string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beacon routing for general-position orthogonal polygons"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "Write JSON here instead of stdout");
    };
    auto poly_arg = [&](CLI::App* sub) { sub->add_option("polygon", o.polygon_path, "Polygon JSON")->required(); };

    CLI::App* validate = app.add_subcommand("validate", "Validate a polygon file");
    poly_arg(validate);
    validate->add_flag("--perturb", o.perturb, "Perturb into general position first");
    common(validate);

    CLI::App* decompose = app.add_subcommand("decompose", "Vertical decomposition and dual tree");
    poly_arg(decompose);
    decompose->add_option("--svg", o.svg, "SVG output path");
    common(decompose);

    CLI::App* attract = app.add_subcommand("attract", "Attraction path of a robot at p toward a beacon at q");
    poly_arg(attract);
    attract->add_option("--p", o.p, "Robot position x,y (rationals like 3/2)")->required();
    attract->add_option("--q", o.q, "Beacon position x,y")->required();
    attract->add_option("--svg", o.svg, "SVG output path");
    common(attract);

    CLI::App* synth = app.add_subcommand("synthesize", "Compute a beacon routing set");
    poly_arg(synth);
    synth->add_option("--svg", o.svg, "SVG output path");
    common(synth);

    CLI::App* verify = app.add_subcommand("verify", "Replay routings between sample points");
    poly_arg(verify);
    verify->add_option("beacons", o.beacons_path, "Beacons JSON")->required();
    verify->add_option("--seed", o.seed, "Sampling seed");
    verify->add_option("--samples,--count", o.samples, "Random interior samples");
    verify->add_option("--require-local", o.require_local, "Every hop must stay within three rectangles")
        ->default_val(true);
    common(verify);

    CLI::App* spiral = app.add_subcommand("spiral", "Lower-bound spiral with certificate");
    spiral->add_option("--sections", o.sections, "Number of sections r")->required()->check(CLI::PositiveNumber);
    spiral->add_option("--lengths", o.lengths, "Comma-separated l_1..l_{3r+1}");
    spiral->add_flag("--no-check", o.no_check, "Skip the length checks before building");
    spiral->add_flag("--allow-large", o.allow_large, "Permit more than 3 sections");
    spiral->add_option("--svg", o.svg, "SVG output path");
    common(spiral);

    CLI::App* corpus = app.add_subcommand("corpus", "Synthesize and verify a seeded random corpus");
    corpus->add_option("--seed", o.seed, "Corpus seed");
    corpus->add_option("--count", o.count, "Number of polygons");
    corpus->add_option("--max-n", o.max_n, "Largest vertex count (even, >= 8)")->check(CLI::Range(8, 1000));
    corpus->add_option("--samples", o.samples, "Random samples per polygon");
    corpus->add_option("--require-local", o.require_local, "Every hop must stay within three rectangles")
        ->default_val(true);
    common(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "validate") return cmd_validate(o);
        if (command == "decompose") return cmd_decompose(o);
        if (command == "attract") return cmd_attract(o);
        if (command == "synthesize") return cmd_synthesize(o);
        if (command == "verify") return cmd_verify(o);
        if (command == "spiral") return cmd_spiral(o);
        if (command == "corpus") {
            if (o.max_n % 2 != 0) throw Error(ErrorCode::ParseError, "--max-n must be even");
            return cmd_corpus(o);
        }
    } catch (const Error& e) {
        if (is_usage_error(e.code())) {
            std::cerr << "error: " << e.what() << "\n";
            return kUsage;
        }
        std::cerr << "internal error: " << e.what() << "\nstate dump: " << write_state_dump(command, e.what()) << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\nstate dump: " << write_state_dump(command, e.what()) << "\n";
        return kInternal;
    }
    return kUsage;
}
