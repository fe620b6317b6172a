#pragma once

// Mutable working complex used by every refinement pipeline. A mesh carries,
// per vertex, a row of rational data that is interpolated affinely whenever a
// simplex is subdivided; pipelines use it for map values or term columns.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nullary/geometry.hpp"
#include "nullary/triangulation.hpp"

namespace nullary::detail {

using DataRow = std::vector<Rational>;

class Mesh {
public:
    enum class Space { Domain, Values };

    Mesh(std::size_t dim, std::size_t width) : dim_(dim), width_(width) {}

    static Mesh from_complex(const SimplicialComplex& complex, const std::vector<DataRow>& data = {});
    /// Kuhn triangulation of the integer box [lo, hi] (unit cubes, each split into n! simplices).
    static Mesh kuhn_box(const IntegerVector& lo, const IntegerVector& hi, std::size_t width = 0);
    /// Kuhn box around the bounding box of a polyhedron, then cut down to it.
    static Mesh covering(const Polyhedron& p);

    std::size_t dim() const { return dim_; }
    std::size_t width() const { return width_; }
    std::size_t vertex_count() const { return points_.size(); }
    const RationalPoint& point(std::size_t v) const { return points_[v]; }
    const DataRow& data(std::size_t v) const { return data_[v]; }
    DataRow& data(std::size_t v) { return data_[v]; }
    const std::vector<Cell>& cells() const { return cells_; }
    const RationalPoint& test_point(std::size_t v, Space s) const {
        return s == Space::Domain ? points_[v] : data_[v];
    }

    /// Resize every data row (new entries zero).
    void set_width(std::size_t width);

    std::size_t add_vertex(const RationalPoint& p, DataRow data);
    std::optional<std::size_t> find_vertex(const RationalPoint& p) const;
    void add_cell(Cell cell);

    std::vector<Cell> faces() const;
    std::vector<RationalPoint> cell_points(const Cell& c) const;

    /// Splits edge (a, b) at a + t (b - a); every cell on the edge is halved.
    std::size_t split_edge(std::size_t a, std::size_t b, const Rational& t);

    /// Stellar subdivision of every cell containing `face` at the point with
    /// barycentric coordinates `weights` on `face`.
    std::size_t star(const Cell& face, const RationalVector& weights);

    /// Splits every edge along which the affine functional `h` (evaluated on
    /// vertices) changes strict sign. Returns the number of splits.
    std::size_t split_by(const std::function<Rational(std::size_t)>& h);

    /// Subdivides until, for every cell (or every face when `all_faces`), the
    /// test-space image of that simplex either lies in `t`, is strictly
    /// separated from it by one of its half-spaces, or straddles none of its
    /// hyperplanes. Afterwards each such simplex meeting `t` in its relative
    /// interior lies in `t`.
    std::size_t refine_against(const Polytope& t, Space space, bool all_faces);

    /// Farey blow-ups at minimal non-regular faces until every simplex is
    /// regular. Throws IterationCap after `cap` blow-ups.
    std::size_t desingularize(std::size_t cap = 10000);

    /// Makes p a vertex by starring the smallest face containing it.
    /// Throws PointOutside.
    std::size_t insert_point(const RationalPoint& p);

    /// Replaces the complex by the maximal faces that satisfy `keep`.
    /// `keep` must be closed under taking faces.
    void keep_faces(const std::function<bool(const Cell&)>& keep);

    /// Canonical complex (lexicographic vertices, sorted cells); unused
    /// vertices dropped. Data rows are reordered to match when requested.
    SimplicialComplex to_complex(std::vector<DataRow>* data = nullptr) const;

    /// Linear scan for the first cell containing x, returning barycentric
    /// interpolation of the data there.
    std::optional<DataRow> interpolate(const RationalPoint& x) const;

private:
    // cells containing `face`, via the incidence list of its first vertex
    std::vector<std::size_t> cells_with(const Cell& face) const;
    // replaces cell i by copies with each vertex of `face` in turn swapped for m
    void subdivide(std::size_t i, const Cell& face, std::size_t m);
    void reindex();

    std::size_t dim_;
    std::size_t width_;
    std::vector<RationalPoint> points_;
    std::vector<DataRow> data_;
    std::vector<Cell> cells_;
    std::vector<std::vector<std::size_t>> incident_;  // may hold stale entries
    std::map<RationalPoint, std::size_t> index_;
};

}  // namespace nullary::detail

namespace nullary::detail {

struct Overlay {
    Mesh mesh;
    std::vector<std::size_t> target;  // per cell of `mesh`
    bool covered = true;
};

/// Intersects every cell of `m` with every target (pulled back through the
/// data when `space` is Values) and triangulates the pieces by pulling from
/// the lexicographically smallest vertex. `targets` must form a complex.
/// `covered` is false as soon as some cell is not inside their union.
Overlay overlay(const Mesh& m, const std::vector<Polytope>& targets, Mesh::Space space);

/// Largest barycentric weight of vertex `i` of the simplex `pts` over its
/// intersection with `t`; nullopt when they are disjoint.
std::optional<Rational> max_weight_in(const std::vector<RationalPoint>& pts, std::size_t i, const Polytope& t);

/// Removes each target in turn from the simplex `pts`, keeping the rest as
/// convex pieces, and returns their vertex barycenters. Empty iff the simplex
/// lies inside the union of the targets.
std::vector<RationalPoint> difference_barycenters(const std::vector<RationalPoint>& pts,
                                                  const std::vector<const Polytope*>& targets);

}  // namespace nullary::detail
