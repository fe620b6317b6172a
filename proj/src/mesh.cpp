#include "nullary/mesh.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nullary/linalg.hpp"

namespace nullary::detail {

namespace {

struct Box {
    RationalPoint lo, hi;
};

template <typename Points>
Box bounding_box(const Points& pts) {
    Box b{pts.front().get(), pts.front().get()};
    for (const auto& pr : pts) {
        const RationalPoint& p = pr.get();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < b.lo[i]) b.lo[i] = p[i];
            if (p[i] > b.hi[i]) b.hi[i] = p[i];
        }
    }
    return b;
}

bool disjoint(const Box& a, const Box& b) {
    for (std::size_t i = 0; i < a.lo.size(); ++i)
        if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return true;
    return false;
}

void for_each_subset(const Cell& cell, const std::function<void(const Cell&)>& f) {
    const std::size_t k = cell.size();
    Cell sub;
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        sub.clear();
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) sub.push_back(cell[i]);
        f(sub);
    }
}

bool contains_all(const Cell& cell, const Cell& face) {
    return std::includes(cell.begin(), cell.end(), face.begin(), face.end());
}

}  // namespace

Mesh Mesh::from_complex(const SimplicialComplex& complex, const std::vector<DataRow>& data) {
    const std::size_t width = data.empty() ? 0 : data.front().size();
    Mesh m(complex.ambient_dim, width);
    for (std::size_t v = 0; v < complex.vertices.size(); ++v)
        m.add_vertex(complex.vertices[v], data.empty() ? DataRow{} : data[v]);
    for (const auto& c : complex.simplices) m.add_cell(c);
    return m;
}

Mesh Mesh::kuhn_box(const IntegerVector& lo, const IntegerVector& hi, std::size_t width) {
    const std::size_t n = lo.size();
    Mesh m(n, width);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    IntegerVector origin = lo;
    while (true) {
        for (const auto& p : perms) {
            IntegerVector cur = origin;
            Cell cell;
            auto add = [&] {
                RationalPoint pt(n);
                for (std::size_t i = 0; i < n; ++i) pt[i] = Rational(cur[i]);
                cell.push_back(m.add_vertex(pt, DataRow(width, Rational(0))));
            };
            add();
            for (auto axis : p) {
                cur[axis] += 1;
                add();
            }
            m.add_cell(cell);
        }
        std::size_t i = 0;
        while (i < n) {
            origin[i] += 1;
            if (origin[i] < hi[i]) break;
            origin[i] = lo[i];
            ++i;
        }
        if (i == n) break;
    }
    return m;
}

Mesh Mesh::covering(const Polyhedron& p) {
    const std::size_t n = p.ambient_dim;
    IntegerVector lo(n), hi(n);
    bool first = true;
    for (const auto& piece : p.pieces)
        for (const auto& v : piece.vertices)
            for (std::size_t i = 0; i < n; ++i) {
                Integer f = floor(v[i]), c = ceil(v[i]);
                if (first || f < lo[i]) lo[i] = f;
                if (first || c > hi[i]) hi[i] = c;
                if (i + 1 == n) first = false;
            }
    if (first) throw Error(ErrorCode::EmptyFamily, "cannot triangulate an empty polyhedron");
    for (std::size_t i = 0; i < n; ++i)
        if (hi[i] == lo[i]) hi[i] = lo[i] + 1;
    Mesh m = kuhn_box(lo, hi);
    for (const auto& piece : p.pieces) m.refine_against(piece, Space::Domain, true);
    m.keep_faces([&](const Cell& f) { return p.contains(Simplex(m.cell_points(f)).barycenter()); });
    return m;
}

void Mesh::set_width(std::size_t width) {
    width_ = width;
    for (auto& row : data_) row.resize(width, Rational(0));
}

std::size_t Mesh::add_vertex(const RationalPoint& p, DataRow data) {
    if (p.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "vertex dimension mismatch");
    if (auto it = index_.find(p); it != index_.end()) return it->second;
    data.resize(width_, Rational(0));
    const std::size_t id = points_.size();
    points_.push_back(p);
    data_.push_back(std::move(data));
    incident_.emplace_back();
    index_.emplace(p, id);
    return id;
}

std::optional<std::size_t> Mesh::find_vertex(const RationalPoint& p) const {
    if (auto it = index_.find(p); it != index_.end()) return it->second;
    return std::nullopt;
}

void Mesh::add_cell(Cell cell) {
    std::sort(cell.begin(), cell.end());
    for (auto v : cell) incident_[v].push_back(cells_.size());
    cells_.push_back(std::move(cell));
}

std::vector<std::size_t> Mesh::cells_with(const Cell& face) const {
    std::vector<std::size_t> out;
    for (auto i : incident_[face.front()])
        if (contains_all(cells_[i], face)) out.push_back(i);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Mesh::subdivide(std::size_t i, const Cell& face, std::size_t m) {
    const Cell c = cells_[i];
    bool first = true;
    for (auto drop : face) {
        Cell piece = c;
        std::replace(piece.begin(), piece.end(), drop, m);
        std::sort(piece.begin(), piece.end());
        if (first) {
            cells_[i] = std::move(piece);
            incident_[m].push_back(i);
            first = false;
        } else {
            add_cell(std::move(piece));
        }
    }
}

void Mesh::reindex() {
    for (auto& l : incident_) l.clear();
    for (std::size_t i = 0; i < cells_.size(); ++i)
        for (auto v : cells_[i]) incident_[v].push_back(i);
}

std::vector<Cell> Mesh::faces() const {
    std::set<Cell> all;
    for (const auto& c : cells_) for_each_subset(c, [&](const Cell& f) { all.insert(f); });
    return {all.begin(), all.end()};
}

std::vector<RationalPoint> Mesh::cell_points(const Cell& c) const {
    std::vector<RationalPoint> out;
    out.reserve(c.size());
    for (auto v : c) out.push_back(points_[v]);
    return out;
}

std::size_t Mesh::split_edge(std::size_t a, std::size_t b, const Rational& t) {
    RationalPoint p(dim_);
    for (std::size_t i = 0; i < dim_; ++i) p[i] = points_[a][i] + t * (points_[b][i] - points_[a][i]);
    DataRow d(width_);
    for (std::size_t i = 0; i < width_; ++i) d[i] = data_[a][i] + t * (data_[b][i] - data_[a][i]);
    const std::size_t m = add_vertex(p, std::move(d));
    const Cell edge = a < b ? Cell{a, b} : Cell{b, a};
    for (auto i : cells_with(edge)) subdivide(i, edge, m);
    return m;
}

std::size_t Mesh::star(const Cell& face, const RationalVector& weights) {
    RationalPoint p(dim_, Rational(0));
    DataRow d(width_, Rational(0));
    for (std::size_t i = 0; i < face.size(); ++i) {
        for (std::size_t c = 0; c < dim_; ++c) p[c] += weights[i] * points_[face[i]][c];
        for (std::size_t c = 0; c < width_; ++c) d[c] += weights[i] * data_[face[i]][c];
    }
    if (auto existing = find_vertex(p)) return *existing;
    const std::size_t m = add_vertex(p, std::move(d));
    for (auto i : cells_with(face)) subdivide(i, face, m);
    return m;
}

std::size_t Mesh::split_by(const std::function<Rational(std::size_t)>& h) {
    std::vector<Rational> value(points_.size());
    for (std::size_t v = 0; v < points_.size(); ++v) value[v] = h(v);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& c : cells_)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (sgn(value[c[i]]) * sgn(value[c[j]]) < 0) edges.emplace(c[i], c[j]);
    for (const auto& [a, b] : edges) split_edge(a, b, value[a] / (value[a] - value[b]));
    return edges.size();
}

std::size_t Mesh::refine_against(const Polytope& t, Space space, bool all_faces) {
    struct Plane {
        const Constraint* c;
        Integer sign;
    };
    std::vector<const Constraint*> hyperplanes;
    std::vector<Plane> separators;
    for (const auto& c : t.halfspaces.inequalities) {
        hyperplanes.push_back(&c);
        separators.push_back({&c, 1});
    }
    for (const auto& c : t.halfspaces.equalities) {
        hyperplanes.push_back(&c);
        separators.push_back({&c, 1});
        separators.push_back({&c, -1});
    }
    std::vector<std::reference_wrapper<const RationalPoint>> tv(t.vertices.begin(), t.vertices.end());
    const Box tbox = bounding_box(tv);

    std::size_t total = 0;
    std::vector<Rational> slack;
    while (true) {
        // marks[h] = edges straddling hyperplane h
        std::vector<std::set<std::pair<std::size_t, std::size_t>>> marks(hyperplanes.size());
        std::set<Cell> seen;
        auto examine = [&](const Cell& f) {
            if (f.size() < 2) return;
            if (all_faces && !seen.insert(f).second) return;
            std::vector<std::reference_wrapper<const RationalPoint>> pts;
            for (auto v : f) pts.emplace_back(test_point(v, space));
            if (disjoint(bounding_box(pts), tbox)) return;
            if (std::all_of(pts.begin(), pts.end(), [&](const RationalPoint& p) { return t.contains(p); }))
                return;
            for (const auto& sep : separators) {
                bool all_out = true, some_strict = false;
                for (const RationalPoint& p : pts) {
                    Rational s = sep.c->slack(p) * sep.sign;
                    if (s > 0) { all_out = false; break; }
                    if (s < 0) some_strict = true;
                }
                if (all_out && some_strict) return;
            }
            for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
                slack.assign(f.size(), Rational(0));
                bool pos = false, neg = false;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    slack[i] = hyperplanes[h]->slack(pts[i]);
                    if (slack[i] > 0) pos = true;
                    if (slack[i] < 0) neg = true;
                }
                if (!(pos && neg)) continue;
                for (std::size_t i = 0; i < f.size(); ++i)
                    for (std::size_t j = i + 1; j < f.size(); ++j)
                        if (sgn(slack[i]) * sgn(slack[j]) < 0) marks[h].emplace(f[i], f[j]);
            }
        };
        for (const auto& c : cells_) {
            if (all_faces) {
                std::vector<std::reference_wrapper<const RationalPoint>> pts;
                for (auto v : c) pts.emplace_back(test_point(v, space));
                if (disjoint(bounding_box(pts), tbox)) continue;
                for_each_subset(c, examine);
            } else {
                examine(c);
            }
        }
        auto it = std::find_if(marks.begin(), marks.end(), [](const auto& m) { return !m.empty(); });
        if (it == marks.end()) break;
        const Constraint& plane = *hyperplanes[static_cast<std::size_t>(it - marks.begin())];
        for (const auto& [a, b] : *it) {
            Rational sa = plane.slack(test_point(a, space));
            Rational sb = plane.slack(test_point(b, space));
            split_edge(a, b, sa / (sa - sb));
            ++total;
        }
    }
    return total;
}

std::size_t Mesh::desingularize(std::size_t cap) {
    // non-regular faces ordered by (size, sorted vertex coordinates)
    using Key = std::pair<std::size_t, std::vector<RationalPoint>>;
    std::map<Key, Cell> bad;
    auto consider = [&](const Cell& f) {
        if (f.size() < 2) return;
        auto pts = cell_points(f);
        if (is_regular_simplex(pts)) return;
        std::sort(pts.begin(), pts.end());
        bad.emplace(Key{f.size(), std::move(pts)}, f);
    };
    std::set<Cell> all;
    for (const auto& c : cells_) for_each_subset(c, [&](const Cell& f) { all.insert(f); });
    for (const auto& f : all) consider(f);

    std::size_t blowups = 0;
    while (!bad.empty()) {
        const Cell face = bad.begin()->second;
        if (++blowups > cap)
            throw Error(ErrorCode::IterationCap,
                        "desingularization exceeded " + std::to_string(cap) + " blow-ups");

        // Farey mediant when it lowers the multiplicity, otherwise the first
        // fundamental-parallelepiped lattice point.
        linalg::IntMatrix rows;
        for (auto v : face) rows.push_back(homogeneous(points_[v]));
        IntegerVector sum(rows.front().size(), Integer(0));
        for (const auto& r : rows)
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r[i];
        Integer g = 0;
        for (const auto& x : sum) g = gcd(g, x);
        RationalVector coeffs(face.size(), Rational(1));
        if (g == 1) {
            auto lp = linalg::parallelepiped_point(rows);
            if (!lp) throw Error(ErrorCode::IntegralityFailure, "non-regular face without lattice point");
            coeffs = lp->coefficients;
        }
        // point = sum c_i w~_i / (sum c_i den_i); barycentric weight c_i den_i / total
        Rational total = 0;
        for (std::size_t i = 0; i < face.size(); ++i) total += coeffs[i] * rows[i].back();
        RationalVector weights(face.size());
        for (std::size_t i = 0; i < face.size(); ++i) weights[i] = coeffs[i] * rows[i].back() / total;
        const std::size_t before = points_.size();
        const std::size_t m = star(face, weights);
        if (m != before) throw Error(ErrorCode::IntegralityFailure, "blow-up point is already a vertex");

        for (auto it = bad.begin(); it != bad.end();) {
            if (contains_all(it->second, face)) it = bad.erase(it);
            else ++it;
        }
        std::set<Cell> fresh;
        for (auto i : cells_with({m})) {
            for_each_subset(cells_[i], [&](const Cell& f) {
                if (std::binary_search(f.begin(), f.end(), m)) fresh.insert(f);
            });
        }
        for (const auto& f : fresh) consider(f);
    }
    return blowups;
}

std::size_t Mesh::insert_point(const RationalPoint& p) {
    if (auto v = find_vertex(p)) return *v;
    for (const auto& c : cells_) {
        auto b = barycentric(cell_points(c), p);
        if (!b || std::any_of(b->begin(), b->end(), [](const Rational& q) { return q < 0; })) continue;
        Cell face;
        RationalVector weights;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if ((*b)[i] == 0) continue;
            face.push_back(c[i]);
            weights.push_back((*b)[i]);
        }
        return star(face, weights);
    }
    throw Error(ErrorCode::PointOutside, "point " + to_string(p) + " is outside the mesh");
}

void Mesh::keep_faces(const std::function<bool(const Cell&)>& keep) {
    std::set<Cell> kept;
    for (const auto& c : cells_)
        for_each_subset(c, [&](const Cell& f) {
            if (!kept.count(f) && keep(f)) kept.insert(f);
        });
    std::set<Cell> covered;
    for (const auto& f : kept) {
        if (f.size() < 2) continue;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Cell sub = f;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
            covered.insert(std::move(sub));
        }
    }
    std::vector<Cell> next;
    for (const auto& f : kept)
        if (!covered.count(f)) next.push_back(f);
    cells_ = std::move(next);
    reindex();
}

SimplicialComplex Mesh::to_complex(std::vector<DataRow>* data) const {
    std::vector<bool> used(points_.size(), false);
    for (const auto& c : cells_)
        for (auto v : c) used[v] = true;
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < points_.size(); ++v)
        if (used[v]) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
    std::vector<std::size_t> remap(points_.size(), 0);
    SimplicialComplex out;
    out.ambient_dim = dim_;
    for (std::size_t i = 0; i < order.size(); ++i) {
        remap[order[i]] = i;
        out.vertices.push_back(points_[order[i]]);
        if (data) data->push_back(data_[order[i]]);
    }
    std::set<Cell> cells;
    for (const auto& c : cells_) {
        Cell r;
        for (auto v : c) r.push_back(remap[v]);
        std::sort(r.begin(), r.end());
        cells.insert(std::move(r));
    }
    out.simplices.assign(cells.begin(), cells.end());
    return out;
}

std::optional<DataRow> Mesh::interpolate(const RationalPoint& x) const {
    for (const auto& c : cells_) {
        auto b = barycentric(cell_points(c), x);
        if (!b) continue;
        if (std::any_of(b->begin(), b->end(), [](const Rational& q) { return q < 0; })) continue;
        DataRow out(width_, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < width_; ++j) out[j] += (*b)[i] * data_[c[i]][j];
        return out;
    }
    return std::nullopt;
}

}  // namespace nullary::detail
