#include "mdual/io.hpp"

#include <fstream>
#include <sstream>

namespace mdual {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(std::string("missing key \"") + key + "\"");
    return *it;
}

const char* mode_name(FieldMode m) { return m == FieldMode::Proven ? "proven" : "conjecture"; }

json vec_json(const Vec& v) {
    json a = json::array();
    for (double x : v.coords()) a.push_back(x);
    return a;
}

}  // namespace

MeshData parse_mesh_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("mesh file: top level must be an object");

    MeshData m;
    const json& dim = require(doc, "dimension");
    if (!dim.is_number_integer()) throw InputError("\"dimension\" must be an integer");
    m.dim = dim.get<int>();
    if (m.dim < 2 || m.dim > kMaxMeshDim) {
        throw InputError("\"dimension\" = " + std::to_string(m.dim) + " outside [2, " + std::to_string(kMaxMeshDim) + "]");
    }

    const json& pts = require(doc, "points");
    if (!pts.is_array()) throw InputError("\"points\" must be an array");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const json& p = pts[i];
        if (!p.is_array() || p.size() != static_cast<std::size_t>(m.dim)) {
            throw InputError("points[" + std::to_string(i) + "] must be an array of " + std::to_string(m.dim) +
                             " numbers");
        }
        Vec v(m.dim);
        for (int c = 0; c < m.dim; ++c) {
            if (!p[c].is_number()) {
                throw InputError("points[" + std::to_string(i) + "][" + std::to_string(c) + "] is not a number");
            }
            v[c] = p[c].get<double>();
        }
        m.points.push_back(v);
    }

    const json& cells = require(doc, "cells");
    if (!cells.is_array()) throw InputError("\"cells\" must be an array");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const json& c = cells[i];
        if (!c.is_array() || c.size() != static_cast<std::size_t>(m.dim + 1)) {
            throw InputError("cells[" + std::to_string(i) + "] must be an array of " + std::to_string(m.dim + 1) +
                             " indices");
        }
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (!c[k].is_number_integer()) {
                throw InputError("cells[" + std::to_string(i) + "][" + std::to_string(k) + "] is not an integer");
            }
            m.cells.push_back(c[k].get<Index>());
        }
    }
    return m;
}

MeshData read_mesh_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_mesh_json(ss.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Triangulation to_triangulation(MeshData data, ValidationOptions options) {
    return Triangulation::build(data.dim, std::move(data.points), std::move(data.cells), options);
}

MeshData to_mesh_data(const Triangulation& t) {
    MeshData m;
    m.dim = t.dim();
    m.points.assign(t.points().begin(), t.points().end());
    m.cells.assign(t.cells_flat().begin(), t.cells_flat().end());
    return m;
}

json mesh_to_json(const MeshData& mesh) {
    json j;
    j["dimension"] = mesh.dim;
    json pts = json::array();
    for (const Vec& p : mesh.points) pts.push_back(vec_json(p));
    j["points"] = std::move(pts);
    json cells = json::array();
    const std::size_t nv = static_cast<std::size_t>(mesh.dim) + 1;
    for (std::size_t c = 0; c + nv <= mesh.cells.size(); c += nv) {
        cells.push_back(json(std::vector<Index>(mesh.cells.begin() + c, mesh.cells.begin() + c + nv)));
    }
    j["cells"] = std::move(cells);
    return j;
}

json dual_to_json(const Triangulation& t, const DualVolumeField& volumes, const DirectedAreaField& field) {
    check_field_matches(t, field);
    json j;
    j["dimension"] = t.dim();
    j["volumes"] = volumes.volumes;
    json areas = json::array();
    for (std::size_t e = 0; e < field.n.size(); ++e) {
        areas.push_back({{"edge", {t.edges()[e].a, t.edges()[e].b}}, {"n", vec_json(field.n[e])}});
    }
    j["directed_areas"] = std::move(areas);
    j["meta"] = {
        {"factor", field.factor},
        {"mode", mode_name(field.mode)},
        {"boundary_corrected", field.boundary_corrected},
    };
    if (!field.notice.empty()) j["meta"]["notice"] = field.notice;
    return j;
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["dimension"] = r.dim;
    j["mode"] = mode_name(r.mode);
    j["closure_max"] = r.closure_max;
    j["closure_scale"] = r.closure_scale;
    j["field_max_rel_err"] = r.field_max_rel_err;
    j["field_worst_edge"] = r.field_worst_edge;
    j["volume_max_rel_err"] = r.volume_max_rel_err;
    j["conservation_deficit"] = r.conservation_deficit;
    j["total_volume"] = r.total_volume;
    j["identity"] = {
        {"first_line_max_rel_err", r.first_line_max_rel_err},
        {"edge_field_interior_max_rel_err", r.edge_field_interior_max_rel_err},
        {"edge_field_boundary_max_rel_err", r.edge_field_boundary_max_rel_err},
    };
    j["coefficients"] = {
        {"closure", r.closure_coefficient},
        {"alternate", r.alternate_coefficient},
        {"alternate_closure_max", r.alternate_closure_max},
    };
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"tolerance", c.tolerance},
                          {"gating", c.gating},
                          {"pass", c.pass}});
    }
    j["checks"] = std::move(checks);
    json res = json::array();
    for (const Vec& a : r.closure_residuals) res.push_back(vec_json(a));
    j["closure_residuals"] = std::move(res);
    j["inverted_pieces"] = r.inverted_pieces;
    j["warnings"] = r.warnings;
    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace mdual
