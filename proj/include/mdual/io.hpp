#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdual/dual_algebraic.hpp"
#include "mdual/mesh.hpp"
#include "mdual/verify.hpp"

namespace mdual {

/// Malformed input file; the message carries the location.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raw mesh file contents before validation.
struct MeshData {
    int dim = 0;
    std::vector<Vec> points;
    std::vector<Index> cells;  // (d+1) per cell
};

/// Parses {"dimension": d, "points": [[...], ...], "cells": [[...], ...]}.
MeshData parse_mesh_json(const std::string& text);
MeshData read_mesh_file(const std::filesystem::path& path);

Triangulation to_triangulation(MeshData data, ValidationOptions options = {});
MeshData to_mesh_data(const Triangulation& t);

nlohmann::json mesh_to_json(const MeshData& mesh);
nlohmann::json dual_to_json(const Triangulation& t, const DualVolumeField& volumes, const DirectedAreaField& field);
nlohmann::json report_to_json(const VerificationReport& report);

/// Two-space indented JSON with shortest round-trip number formatting and a
/// trailing newline.
std::string dump(const nlohmann::json& j);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mdual
