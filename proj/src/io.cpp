#include "beacon/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace beacon::io {

json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(static_cast<int64_t>(z.get_si()));
    return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<uint64_t>()));
        return mpz_class(std::to_string(j.get<int64_t>()));
    }
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw Error(ErrorCode::ParseError, "not an integer: \"" + s + "\"");
        return mpz_class(s[0] == '+' ? s.substr(1) : s);
    }
    throw Error(ErrorCode::ParseError, "expected integer, got " + j.dump());
}

namespace {

Coord make_coord(const json& num, const json& den) {
    mpz_class n = integer_from_json(num), d = integer_from_json(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    Coord c(n, d);
    c.canonicalize();
    return c;
}

}  // namespace

json point_json(const Point& p) {
    return json::array({integer_json(p.x.get_num()), integer_json(p.x.get_den()), integer_json(p.y.get_num()),
                        integer_json(p.y.get_den())});
}

Point point_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "point must be an array: " + j.dump());
    if (j.size() == 4) return Point(make_coord(j[0], j[1]), make_coord(j[2], j[3]));
    if (j.size() == 2) return Point(make_coord(j[0], json(1)), make_coord(j[1], json(1)));
    throw Error(ErrorCode::ParseError, "point must have 2 or 4 entries: " + j.dump());
}

json points_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (const Point& p : pts) a.push_back(point_json(p));
    return a;
}

std::vector<Point> points_from_json(const json& j) {
    const json* list = &j;
    if (j.is_object()) {
        if (!j.contains("beacons")) throw Error(ErrorCode::ParseError, "expected a point list or {\"beacons\": [...]}");
        list = &j.at("beacons");
    }
    if (!list->is_array()) throw Error(ErrorCode::ParseError, "point list must be an array");
    std::vector<Point> out;
    for (const json& e : *list) out.push_back(point_from_json(e.is_object() ? e.at("point") : e));
    return out;
}

json polygon_json(const OrthoPolygon& poly) {
    return json{{"n", poly.size()}, {"vertices", points_json(poly.vertices())}};
}

std::vector<Point> polygon_vertices_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw Error(ErrorCode::ParseError, "polygon must be an object with \"vertices\"");
    std::vector<Point> v;
    for (const json& e : j.at("vertices")) v.push_back(point_from_json(e));
    if (v.empty()) throw Error(ErrorCode::EmptyInput, "polygon has no vertices");
    return v;
}

json path_json(const AttractionPath& path) {
    json events = json::array();
    for (const PathEvent& e : path.events) {
        json ev{{"point", point_json(e.point)},
                {"kind", e.kind == MoveKind::StraightTowardBeacon ? "straight" : "slide"}};
        if (e.kind == MoveKind::SlideAlongEdge) {
            ev["edge"] = e.edge;
            ev["direction"] = e.direction;
        }
        events.push_back(ev);
    }
    return json{{"start", point_json(path.start)},
                {"beacon", point_json(path.beacon)},
                {"events", events},
                {"status", terminal_name(path.terminal.kind)},
                {"at", point_json(path.terminal.at)}};
}

json decomposition_json(const Decomposition& d) {
    json rects = json::array();
    for (size_t i = 0; i < d.rect_count(); ++i) {
        const Rect& r = d.rect(static_cast<int>(i));
        rects.push_back(json{{"id", i}, {"lo", point_json(r.lo)}, {"hi", point_json(r.hi)}});
    }
    json verts = json::array();
    for (const Vertical& v : d.verticals())
        verts.push_back(json{{"bottom", point_json(Point(v.x, v.y_lo))},
                             {"top", point_json(Point(v.x, v.y_hi))},
                             {"reflex", point_json(v.reflex_vertex)},
                             {"left", v.left_rect},
                             {"right", v.right_rect}});
    DualTree t = dual_tree(d);
    json edges = json::array();
    for (auto [a, b] : t.edges) edges.push_back(json::array({a, b}));
    RootedDualTree rt = root_at_leaf(d);
    json rels = json::array();
    for (size_t r = 0; r < d.rect_count(); ++r)
        for (int s : d.neighbors(static_cast<int>(r))) {
            NeighborRelation nr = classify_neighbor(d, static_cast<int>(r), s);
            rels.push_back(json{{"of", r},
                                {"neighbor", s},
                                {"side", side_name(nr.side)},
                                {"position", vpos_name(nr.vertical_pos)},
                                {"size", size_name(nr.size)},
                                {"reflex", point_json(nr.shared_reflex)}});
        }
    return json{{"rectangles", rects},
                {"verticals", verts},
                {"tree_edges", edges},
                {"root", rt.root},
                {"height", rt.height()},
                {"neighbors", rels}};
}

json trace_json(const std::vector<ReductionStep>& trace) {
    json out = json::array();
    for (const ReductionStep& s : trace) {
        json placed = json::array();
        for (const Placement& p : s.placed)
            placed.push_back(json{{"point", point_json(p.point)}, {"role", role_name(p.role)}, {"covers", p.covers}});
        out.push_back(json{{"case", case_name(s.case_id)},
                           {"removed", s.removed},
                           {"placed", placed},
                           {"symmetry", symmetry_name(s.symmetry)}});
    }
    return out;
}

json budget_json(const BudgetReport& b) {
    return json{{"total", b.total},
                {"bound", b.bound},
                {"global_ok", b.global_ok},
                {"violating_steps", b.violating_steps},
                {"histogram", b.histogram},
                {"ok", b.ok()}};
}

json beacons_json(const BeaconSet& b) {
    json out = json::array();
    for (const PlacedBeacon& p : b.beacons)
        out.push_back(json{{"point", point_json(p.point)}, {"step", p.step}, {"role", role_name(p.role)}});
    return out;
}

json report_json(const VerificationReport& r) {
    json fails = json::array();
    for (const RoutingFailure& f : r.failures)
        fails.push_back(json{{"source", f.source},
                             {"target", f.target},
                             {"p", point_json(f.p)},
                             {"q", point_json(f.q)},
                             {"reason", f.reason},
                             {"direct", path_json(f.direct)}});
    return json{{"pairs_checked", r.pairs_checked},
                {"failures", fails},
                {"all_local", r.all_local},
                {"simulations", r.simulations}};
}

namespace {

json rect_json(const Rect& r) { return json{{"lo", point_json(r.lo)}, {"hi", point_json(r.hi)}}; }

}  // namespace

json spiral_sections_json(const SpiralGeometry& g) {
    json secs = json::array();
    for (const SectionGeometry& s : g.sections) {
        json corners = json::array(), halls = json::array();
        for (const Rect& r : s.corners) corners.push_back(rect_json(r));
        for (const Rect& r : s.hallways) halls.push_back(rect_json(r));
        secs.push_back(json{{"index", s.index},
                            {"corners", corners},
                            {"hallways", halls},
                            {"h_plus_first", rect_json(s.h_plus_first)},
                            {"h_minus_last", rect_json(s.h_minus_last)},
                            {"m_in_first", point_json(s.m_in_first)},
                            {"m_out_first", point_json(s.m_out_first)},
                            {"m_in_last", point_json(s.m_in_last)},
                            {"m_out_last", point_json(s.m_out_last)},
                            {"reflex", points_json(s.reflex)},
                            {"convex", points_json(s.convex)}});
    }
    json lengths = json::array();
    for (const mpz_class& l : g.spec.lengths) lengths.push_back(integer_json(l));
    return json{{"r", g.spec.r}, {"lengths", lengths}, {"sections", secs}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

size_t max_coordinate_bits() {
    const char* env = std::getenv("BEACON_ROUTE_MAX_BITS");
    if (env == nullptr || *env == '\0') return 256;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) throw Error(ErrorCode::ParseError, std::string("bad BEACON_ROUTE_MAX_BITS: ") + env);
    return v;
}

void check_coordinate_bits(const std::vector<Point>& pts) {
    size_t cap = max_coordinate_bits();
    for (const Point& p : pts)
        if (bit_length(p) > cap)
            throw Error(ErrorCode::CoordinateTooLarge,
                        "coordinate needs " + std::to_string(bit_length(p)) + " bits, cap is " + std::to_string(cap));
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json manifest_json(const RunManifest& m) {
    return json{{"command", m.command},
                {"inputs", m.inputs},
                {"seed", m.seed},
                {"flags", m.flags},
                {"tool_version", m.tool_version},
                {"output_digest", m.output_digest}};
}

namespace {

const char* kPalette[] = {"#f4d35e", "#9ad1d4", "#f7a072", "#b8e0a8", "#c3b1e1", "#f2b5d4", "#a0c4ff", "#ffd6a5"};

struct Frame {
    double x0, y1, s;
    double px(const Coord& x) const { return 20 + (to_double(x) - x0) * s; }
    double py(const Coord& y) const { return 20 + (y1 - to_double(y)) * s; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Scene& scene) {
    if (scene.polygon == nullptr || scene.polygon->size() == 0)
        throw Error(ErrorCode::IoError, "scene has no polygon");
    const OrthoPolygon& poly = *scene.polygon;
    Rect box = poly.bounding_box();
    double w = to_double(box.width()), h = to_double(box.height());
    double span = std::max(w, h);
    Frame f{to_double(box.lo.x), to_double(box.hi.y), 800.0 / span};
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w * f.s + 40) << "\" height=\""
      << fmt(h * f.s + 40) << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (scene.decomposition != nullptr) {
        for (auto [id, group] : scene.shading) {
            const Rect& r = scene.decomposition->rect(id);
            o << "<rect class=\"shaded\" x=\"" << fmt(f.px(r.lo.x)) << "\" y=\"" << fmt(f.py(r.hi.y)) << "\" width=\""
              << fmt(to_double(r.width()) * f.s) << "\" height=\"" << fmt(to_double(r.height()) * f.s) << "\" fill=\""
              << kPalette[static_cast<size_t>(group) % std::size(kPalette)] << "\"/>\n";
        }
        for (const Vertical& v : scene.decomposition->verticals())
            o << "<line class=\"vertical\" x1=\"" << fmt(f.px(v.x)) << "\" y1=\"" << fmt(f.py(v.y_lo)) << "\" x2=\""
              << fmt(f.px(v.x)) << "\" y2=\"" << fmt(f.py(v.y_hi))
              << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
        if (scene.show_tree) {
            DualTree t = dual_tree(*scene.decomposition);
            for (auto [a, b] : t.edges) {
                Point ca = scene.decomposition->rect(a).center(), cb = scene.decomposition->rect(b).center();
                o << "<line class=\"tree\" x1=\"" << fmt(f.px(ca.x)) << "\" y1=\"" << fmt(f.py(ca.y)) << "\" x2=\""
                  << fmt(f.px(cb.x)) << "\" y2=\"" << fmt(f.py(cb.y)) << "\" stroke=\"steelblue\"/>\n";
            }
        }
    }
    o << "<polygon class=\"boundary\" points=\"";
    for (size_t i = 0; i < poly.size(); ++i)
        o << (i ? " " : "") << fmt(f.px(poly.vertex(i).x)) << "," << fmt(f.py(poly.vertex(i).y));
    o << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
    for (const auto& path : scene.paths) {
        o << "<polyline class=\"path\" points=\"";
        for (size_t i = 0; i < path.size(); ++i) o << (i ? " " : "") << fmt(f.px(path[i].x)) << "," << fmt(f.py(path[i].y));
        o << "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
    }
    // Beacon dots are drawn at a fixed pixel radius, so epsilon offsets read as exaggerated.
    for (const Point& b : scene.beacons)
        o << "<circle class=\"beacon\" cx=\"" << fmt(f.px(b.x)) << "\" cy=\"" << fmt(f.py(b.y))
          << "\" r=\"5\" fill=\"green\"/>\n";
    o << "</svg>\n";
    return o.str();
}

void emit_svg(const Scene& scene, const std::string& path) { write_text_file(path, render_svg(scene)); }

}  // namespace beacon::io
