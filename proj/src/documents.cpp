#include "hlx/documents.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hlx/errors.hpp"

namespace hlx {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& ctx) {
    if (!j.is_object()) throw DocumentError(ctx + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw DocumentError(ctx + ": missing field '" + key + "'");
    return *it;
}

double number(const json& j, const std::string& ctx) {
    if (!j.is_number()) throw DocumentError(ctx + ": expected a number");
    return j.get<double>();
}

Vec2 vec2(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.size() != 2) throw DocumentError(ctx + ": expected [x2, x3]");
    return {number(j[0], ctx), number(j[1], ctx)};
}

PlanarSurface::Ring ring(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw DocumentError(ctx + ": expected an array of points");
    PlanarSurface::Ring r;
    for (size_t i = 0; i < j.size(); ++i) {
        r.push_back(vec2(j[i], ctx + "[" + std::to_string(i) + "]"));
    }
    return r;
}

json ring_json(const PlanarSurface::Ring& r) {
    json out = json::array();
    for (const Vec2& p : r) out.push_back(json::array({p.x, p.y}));
    return out;
}

}  // namespace

json to_json(const Hyperlink& h) {
    json loops = json::array();
    for (int i = 0; i < h.size(); ++i) {
        json vertices = json::array();
        for (const Point4& p : h.loops[static_cast<size_t>(i)].vertices()) {
            vertices.push_back(json::array({p.x0, p.x1, p.x2, p.x3}));
        }
        json loop{{"vertices", std::move(vertices)}};
        if (i < static_cast<int>(h.labels.size()) && !h.labels[static_cast<size_t>(i)].empty()) {
            loop["name"] = h.labels[static_cast<size_t>(i)];
        }
        loops.push_back(std::move(loop));
    }
    return json{{"loops", std::move(loops)}};
}

json to_json(const ColoredHyperlink& h) {
    json out = to_json(h.base);
    json colors = json::array();
    for (const SpinPair& c : h.colors) {
        colors.push_back(json{{"jplus", c.jplus.value()}, {"jminus", c.jminus.value()}});
    }
    out["colors"] = std::move(colors);
    return out;
}

json to_json(const PlanarSurface& s) {
    json components = json::array();
    for (const PlanarSurface::Component& c : s.components) {
        json holes = json::array();
        for (const PlanarSurface::Ring& h : c.holes) holes.push_back(ring_json(h));
        components.push_back(json{{"outer", ring_json(c.outer)}, {"holes", std::move(holes)}});
    }
    return json{{"components", std::move(components)}, {"normal_sign", s.normal_sign}};
}

Hyperlink hyperlink_from_json(const json& j) {
    Hyperlink h;
    const json& loops = field(j, "loops", "hyperlink");
    if (!loops.is_array() ) throw DocumentError("hyperlink.loops: expected an array");
    for (size_t i = 0; i < loops.size(); ++i) {
        const std::string ctx = "hyperlink.loops[" + std::to_string(i) + "]";
        const json& vertices = field(loops[i], "vertices", ctx);
        if (!vertices.is_array() || vertices.size() < 3) {
            throw DocumentError(ctx + ".vertices: expected >= 3 points");
        }
        std::vector<Point4> pts;
        for (size_t k = 0; k < vertices.size(); ++k) {
            const json& v = vertices[k];
            const std::string vctx = ctx + ".vertices[" + std::to_string(k) + "]";
            if (!v.is_array() || v.size() != 4) {
                throw DocumentError(vctx + ": expected [x0, x1, x2, x3]");
            }
            pts.push_back({number(v[0], vctx), number(v[1], vctx), number(v[2], vctx),
                           number(v[3], vctx)});
        }
        try {
            h.loops.emplace_back(std::move(pts));
        } catch (const std::invalid_argument& e) {
            throw DocumentError(ctx + ": " + e.what());
        }
        h.labels.push_back(loops[i].contains("name") ? loops[i]["name"].get<std::string>() : "");
    }
    return h;
}

ColoredHyperlink colored_hyperlink_from_json(const json& j) {
    ColoredHyperlink ch;
    ch.base = hyperlink_from_json(j);
    const json& colors = field(j, "colors", "colored hyperlink");
    if (!colors.is_array() || colors.size() != ch.base.loops.size()) {
        throw DocumentError("colored hyperlink: colors must match loops one-to-one");
    }
    for (size_t i = 0; i < colors.size(); ++i) {
        const std::string ctx = "colors[" + std::to_string(i) + "]";
        const double jp = number(field(colors[i], "jplus", ctx), ctx + ".jplus");
        const double jm = number(field(colors[i], "jminus", ctx), ctx + ".jminus");
        try {
            ch.colors.push_back({Spin::from_double(jp), Spin::from_double(jm)});
        } catch (const std::invalid_argument& e) {
            throw DocumentError(ctx + ": " + e.what());
        }
    }
    return ch;
}

PlanarSurface surface_from_json(const json& j) {
    PlanarSurface s;
    const json& components = field(j, "components", "surface");
    if (!components.is_array() || components.empty()) {
        throw DocumentError("surface.components: expected a non-empty array");
    }
    for (size_t i = 0; i < components.size(); ++i) {
        const std::string ctx = "surface.components[" + std::to_string(i) + "]";
        PlanarSurface::Component c;
        c.outer = ring(field(components[i], "outer", ctx), ctx + ".outer");
        if (components[i].contains("holes")) {
            const json& holes = components[i]["holes"];
            if (!holes.is_array()) throw DocumentError(ctx + ".holes: expected an array");
            for (size_t k = 0; k < holes.size(); ++k) {
                c.holes.push_back(ring(holes[k], ctx + ".holes[" + std::to_string(k) + "]"));
            }
        }
        s.components.push_back(std::move(c));
    }
    const json& ns = field(j, "normal_sign", "surface");
    if (!ns.is_number_integer() || (ns.get<int>() != 1 && ns.get<int>() != -1)) {
        throw DocumentError("surface.normal_sign: expected +1 or -1");
    }
    s.normal_sign = ns.get<int>();
    return s;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DocumentError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw DocumentError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

Hyperlink read_hyperlink(const std::string& path) {
    return hyperlink_from_json(read_json_file(path));
}

ColoredHyperlink read_colored_hyperlink(const std::string& path) {
    return colored_hyperlink_from_json(read_json_file(path));
}

PlanarSurface read_surface(const std::string& path) {
    return surface_from_json(read_json_file(path));
}

namespace {
std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}
}  // namespace

void write_crossings_csv(std::ostream& os, const std::vector<Crossing>& crossings) {
    os << "plane,s,t,point_u,point_v,orientation,height,time_lag,product\n";
    for (const Crossing& c : crossings) {
        os << c.plane << ',' << fmt(c.s) << ',' << fmt(c.t) << ',' << fmt(c.point.x) << ','
           << fmt(c.point.y) << ',' << c.orientation << ',' << c.height << ',' << c.time_lag
           << ',' << c.sign_product() << "\n";
    }
}

void write_piercings_csv(std::ostream& os, const std::vector<Piercing>& piercings) {
    os << "loop,s,x2,x3,orientation,height,epsilon\n";
    for (const Piercing& p : piercings) {
        os << p.loop_index << ',' << fmt(p.s) << ',' << fmt(p.point.x) << ',' << fmt(p.point.y)
           << ',' << p.orientation << ',' << p.height << ',' << p.epsilon() << "\n";
    }
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
    os << "kappa,estimate_re,estimate_im,reference_re,reference_im,abs_error,rel_error\n";
    for (const ConvergenceRow& r : rows) {
        os << fmt(r.kappa) << ',' << fmt(r.estimate.real()) << ',' << fmt(r.estimate.imag())
           << ',' << fmt(r.reference.real()) << ',' << fmt(r.reference.imag()) << ','
           << fmt(r.abs_error) << ',' << fmt(r.rel_error) << "\n";
    }
}

}  // namespace hlx
