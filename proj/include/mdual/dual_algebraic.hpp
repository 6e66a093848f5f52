#pragma once

#include <span>
#include <utility>
#include <string>
#include <vector>

#include "mdual/kernels/facet_normals.hpp"
#include "mdual/mesh.hpp"
#include "mdual/vec.hpp"

// Closed-form median-dual metrics: node hypervolumes from cell volumes and
// edge directed-hyperarea vectors from opposite-facet normals.
namespace mdual {

/// Per-node median-dual hypervolume, indexed by point id.
struct DualVolumeField {
    std::vector<double> volumes;
};

/// The 2/(d(d+1)) identity is proven for d <= 4 and conjectured above that.
enum class FieldMode { Proven, Conjecture };

/// One vector per mesh edge, in Triangulation::edges() order. Entry e is the
/// vector for the edge oriented from edges()[e].a to edges()[e].b; the reverse
/// direction is its negation.
struct DirectedAreaField {
    int dim = 0;
    std::vector<Vec> n;
    double factor = 0.0;
    bool boundary_corrected = false;
    FieldMode mode = FieldMode::Proven;
    std::string notice;
};

enum class Execution { Sequential, Parallel };

struct AccumulateOptions {
    bool boundary_correction = true;
    /// Parallel mode computes per-cell normals on worker threads; the edge
    /// reduction always runs in ascending cell order.
    Execution execution = Execution::Sequential;
    kernels::Backend backend = kernels::Backend::Auto;
    unsigned threads = 0;  // 0: hardware concurrency
};

double directed_area_factor(int dim);
FieldMode mode_for_dimension(int dim);

/// Every cell's opposite-facet normals: at(c, j) is the normal of the facet of
/// cell c opposite its local vertex j, oriented away from that vertex.
class CellNormals {
public:
    CellNormals(int dim, std::vector<double> data) : dim_(dim), data_(std::move(data)) {}
    Vec at(Index c, int j) const {
        const std::size_t off = (static_cast<std::size_t>(c) * (dim_ + 1) + j) * dim_;
        return Vec::from_span(std::span<const double>(data_.data() + off, dim_));
    }
    std::span<const double> raw() const { return data_; }

private:
    int dim_;
    std::vector<double> data_;
};

/// Throws MeshError(DegenerateCell) if any cell is degenerate.
CellNormals cell_normals(const Triangulation& t, Execution execution = Execution::Sequential,
                         kernels::Backend backend = kernels::Backend::Auto, unsigned threads = 0);

/// V_j = (1/(d+1)) * sum of |T| over cells containing j.
DualVolumeField dual_volumes(const Triangulation& t);

/// n_jk = 2/(d(d+1)) * [ sum_{T ni j,k} n_j^T + 1/2 sum_{boundary B ni j,k} n_B ],
/// the bracketed boundary sum only with `boundary_correction`.
DirectedAreaField directed_area_field(const Triangulation& t, const AccumulateOptions& options = {});
DirectedAreaField directed_area_field(const Triangulation& t, bool apply_boundary_correction);

/// Field vector for the edge oriented j -> k (negated when j > k).
Vec directed_area(const Triangulation& t, const DirectedAreaField& field, Index j, Index k);

enum class IdentityForm {
    FirstLine,  // V_j = 1/(d^2 (d+1)) sum_k sum_{T ni j,k} (p_k - p_j) . n_j^T
    EdgeField,  // V_j = 1/(2d) sum_k (p_k - p_j) . n_jk
};

struct IdentityVolumes {
    DualVolumeField field;
    /// Set for nodes on the boundary when the edge-field form was used; there
    /// the identity is only guaranteed with a boundary-corrected field.
    std::vector<bool> boundary_node;
};

/// Throws std::invalid_argument if `field` was not computed on `t`.
IdentityVolumes dual_volume_via_identity(const Triangulation& t, const DirectedAreaField& field, IdentityForm form);

void check_field_matches(const Triangulation& t, const DirectedAreaField& field);

}  // namespace mdual
