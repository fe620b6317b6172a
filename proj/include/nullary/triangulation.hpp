#pragma once

// Rational simplicial complexes and regular (unimodular) triangulations.

#include <cstddef>
#include <vector>

#include "nullary/geometry.hpp"

namespace nullary {

using Cell = std::vector<std::size_t>;

/// A rational simplicial complex stored by its maximal simplices. Vertices
/// are sorted lexicographically; each cell lists vertex indices in ascending
/// order and the cell list itself is sorted, so equal complexes compare equal.
struct SimplicialComplex {
    std::size_t ambient_dim = 0;
    std::vector<RationalPoint> vertices;
    std::vector<Cell> simplices;

    Simplex simplex(const Cell& cell) const;
    /// Every face of every maximal simplex, each once, sorted.
    std::vector<Cell> faces() const;
    int dimension() const;
    Polyhedron carrier() const;
    std::optional<std::size_t> find_vertex(const RationalPoint& p) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// A complex that passed `is_regular`. Only constructible through `certify`.
class RegularTriangulation {
public:
    RegularTriangulation() = default;
    static RegularTriangulation certify(SimplicialComplex complex);

    const SimplicialComplex& complex() const { return complex_; }
    bool certified() const { return certified_; }
    std::size_t ambient_dim() const { return complex_.ambient_dim; }
    const std::vector<RationalPoint>& vertices() const { return complex_.vertices; }
    const std::vector<Cell>& simplices() const { return complex_.simplices; }

    friend bool operator==(const RegularTriangulation& a, const RegularTriangulation& b) {
        return a.complex_ == b.complex_;
    }

private:
    SimplicialComplex complex_;
    bool certified_ = false;
};

/// Rows are the homogeneous lifts of the vertices.
bool is_regular_simplex(const std::vector<RationalPoint>& vertices);
bool is_regular(const SimplicialComplex& complex);

/// Lattice index of the homogeneous lifts inside their saturation (1 iff regular).
Integer multiplicity(const std::vector<RationalPoint>& vertices);

RationalPoint farey_mediant(const Simplex& face);

/// Stellar subdivision of every simplex containing `face` at its Farey mediant.
SimplicialComplex blowup(const SimplicialComplex& complex, const Simplex& face);

/// Regular triangulation of the union in which each member is a union of
/// simplices. `max_blowups` bounds the desingularization loop.
RegularTriangulation joint_refinement(const std::vector<Polyhedron>& family,
                                      std::size_t max_blowups = 10000);

RegularTriangulation insert_vertex(const RegularTriangulation& triangulation, const RationalPoint& y,
                                   std::size_t max_blowups = 10000);

/// Kuhn (Freudenthal) triangulation of [0,1]^n, 1 <= n <= 4.
RegularTriangulation triangulate_cube(std::size_t n);

Polyhedron unit_cube(std::size_t n);

}  // namespace nullary
