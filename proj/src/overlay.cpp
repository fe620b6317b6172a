#include <algorithm>
#include <set>

#include "nullary/linalg.hpp"
#include "nullary/mesh.hpp"

namespace nullary::detail {

namespace {

struct Box {
    RationalPoint lo, hi;
};

Box box_of(const std::vector<const RationalPoint*>& pts) {
    Box b{*pts.front(), *pts.front()};
    for (const auto* p : pts)
        for (std::size_t i = 0; i < p->size(); ++i) {
            if ((*p)[i] < b.lo[i]) b.lo[i] = (*p)[i];
            if ((*p)[i] > b.hi[i]) b.hi[i] = (*p)[i];
        }
    return b;
}

bool disjoint(const Box& a, const Box& b) {
    for (std::size_t i = 0; i < a.lo.size(); ++i)
        if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return true;
    return false;
}

Rational det(linalg::Matrix m) {
    const std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

// A convex piece of a cell in barycentric coordinates.
struct Piece {
    std::vector<RationalVector> lambda;
    std::vector<std::vector<bool>> tight;  // per inequality, per vertex
};

std::size_t affine_rank(const Piece& p, const std::vector<std::size_t>& ids) {
    if (ids.size() <= 1) return 0;
    linalg::Matrix m;
    for (std::size_t i = 1; i < ids.size(); ++i) m.push_back(p.lambda[ids[i]] - p.lambda[ids[0]]);
    return linalg::rank(std::move(m));
}

// ids sorted by the global vertex order; appends simplices to out
void pull(const Piece& p, const std::vector<std::size_t>& ids, std::size_t d, std::vector<std::vector<std::size_t>>& out) {
    if (ids.size() == d + 1) {
        out.push_back(ids);
        return;
    }
    const std::size_t apex = ids.front();
    std::set<std::vector<std::size_t>> facets;
    for (const auto& row : p.tight) {
        if (row[apex]) continue;
        std::vector<std::size_t> w;
        for (auto v : ids)
            if (row[v]) w.push_back(v);
        if (w.size() < d || w.size() == ids.size()) continue;
        if (affine_rank(p, w) + 1 == d) facets.insert(std::move(w));
    }
    for (const auto& w : facets) {
        std::vector<std::vector<std::size_t>> sub;
        pull(p, w, d - 1, sub);
        for (auto& s : sub) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
}

// Vertices of {lambda >= 0, sum lambda = 1, rows . lambda >= 0}, by clipping
// the standard simplex one row at a time.
std::vector<RationalVector> enumerate_vertices(std::size_t k, const linalg::Matrix& rows) {
    struct Vertex {
        RationalVector x;
        std::vector<char> tight;
    };
    const std::size_t m = rows.size();
    std::vector<Vertex> poly;
    for (std::size_t i = 0; i <= k; ++i) {
        Vertex v{RationalVector(k + 1, Rational(0)), std::vector<char>(m, 0)};
        v.x[i] = 1;
        for (std::size_t j = 0; j <= k; ++j) v.tight[j] = j != i;
        poly.push_back(std::move(v));
    }
    for (std::size_t r = k + 1; r < m && !poly.empty(); ++r) {
        std::vector<Rational> s(poly.size());
        bool neg = false;
        for (std::size_t v = 0; v < poly.size(); ++v) {
            s[v] = dot(rows[r], poly[v].x);
            if (s[v] < 0) neg = true;
            if (s[v] == 0) poly[v].tight[r] = 1;
        }
        if (!neg) continue;
        std::vector<Vertex> next;
        for (std::size_t v = 0; v < poly.size(); ++v)
            if (s[v] >= 0) next.push_back(poly[v]);
        for (std::size_t v = 0; v < poly.size(); ++v) {
            if (s[v] <= 0) continue;
            for (std::size_t w = 0; w < poly.size(); ++w) {
                if (s[w] >= 0) continue;
                std::vector<char> common(m);
                for (std::size_t j = 0; j < r; ++j) common[j] = poly[v].tight[j] && poly[w].tight[j];
                bool edge = true;
                for (std::size_t u = 0; u < poly.size() && edge; ++u) {
                    if (u == v || u == w) continue;
                    bool covers = true;
                    for (std::size_t j = 0; j < r && covers; ++j)
                        if (common[j] && !poly[u].tight[j]) covers = false;
                    if (covers) edge = false;
                }
                if (!edge) continue;
                const Rational t = s[v] / (s[v] - s[w]);
                Vertex n{poly[v].x, std::move(common)};
                for (std::size_t i = 0; i <= k; ++i) n.x[i] += t * (poly[w].x[i] - poly[v].x[i]);
                n.tight[r] = 1;
                next.push_back(std::move(n));
            }
        }
        poly = std::move(next);
    }
    std::set<RationalVector> found;
    for (auto& v : poly) found.insert(std::move(v.x));
    return {found.begin(), found.end()};
}

}  // namespace

Overlay overlay(const Mesh& m, const std::vector<Polytope>& targets, Mesh::Space space) {
    Overlay out{Mesh(m.dim(), m.width()), {}, true};
    std::vector<Box> boxes;
    for (const auto& t : targets) {
        std::vector<const RationalPoint*> pts;
        for (const auto& v : t.vertices) pts.push_back(&v);
        boxes.push_back(box_of(pts));
    }

    for (const auto& cell : m.cells()) {
        const std::size_t k = cell.size() - 1;
        std::vector<const RationalPoint*> test;
        for (auto v : cell) test.push_back(&m.test_point(v, space));
        const Box cbox = box_of(test);

        auto emit = [&](const std::vector<RationalVector>& lambda, const std::vector<std::size_t>& simplex,
                        std::size_t target) {
            Cell c;
            for (auto s : simplex) {
                RationalPoint x(m.dim(), Rational(0));
                DataRow row(m.width(), Rational(0));
                for (std::size_t i = 0; i <= k; ++i) {
                    const Rational& l = lambda[s][i];
                    if (l == 0) continue;
                    for (std::size_t j = 0; j < x.size(); ++j) x[j] += l * m.point(cell[i])[j];
                    for (std::size_t j = 0; j < row.size(); ++j) row[j] += l * m.data(cell[i])[j];
                }
                c.push_back(out.mesh.add_vertex(x, std::move(row)));
            }
            out.mesh.add_cell(std::move(c));
            out.target.push_back(target);
        };

        Rational volume = 0;
        for (std::size_t j = 0; j < targets.size() && volume < 1; ++j) {
            if (disjoint(cbox, boxes[j])) continue;
            const auto& sys = targets[j].halfspaces;
            auto slacks = [&](const Constraint& c) {
                RationalVector s(k + 1);
                for (std::size_t i = 0; i <= k; ++i) s[i] = c.slack(*test[i]);
                return s;
            };
            bool flat = true, separated = false;
            for (const auto& e : sys.equalities) {
                auto s = slacks(e);
                if (std::any_of(s.begin(), s.end(), [](const Rational& x) { return x != 0; })) flat = false;
            }
            if (!flat) continue;  // meets the target in a lower-dimensional set at most
            linalg::Matrix rows;
            for (std::size_t i = 0; i <= k; ++i) {
                RationalVector u(k + 1, Rational(0));
                u[i] = 1;
                rows.push_back(std::move(u));
            }
            bool inside = true;
            for (const auto& c : sys.inequalities) {
                auto s = slacks(c);
                bool pos = false, neg = false;
                for (const auto& x : s) {
                    if (x > 0) pos = true;
                    if (x < 0) neg = true;
                }
                if (!pos) {
                    if (neg) separated = true;
                    else continue;  // the whole cell lies on the hyperplane
                }
                if (separated) break;
                if (neg) {
                    inside = false;
                    rows.push_back(std::move(s));
                }
            }
            if (separated) continue;
            std::vector<RationalVector> lambda;
            if (inside) {
                for (std::size_t i = 0; i <= k; ++i) lambda.push_back(rows[i]);
                std::vector<std::size_t> all(k + 1);
                for (std::size_t i = 0; i <= k; ++i) all[i] = i;
                emit(lambda, all, j);
                volume = 1;
                break;
            }
            Piece p;
            p.lambda = enumerate_vertices(k, rows);
            if (p.lambda.size() < k + 1) continue;
            std::vector<std::size_t> order(p.lambda.size());
            std::vector<RationalPoint> where(p.lambda.size(), RationalPoint(m.dim(), Rational(0)));
            for (std::size_t v = 0; v < p.lambda.size(); ++v) {
                order[v] = v;
                for (std::size_t i = 0; i <= k; ++i)
                    for (std::size_t d = 0; d < m.dim(); ++d) where[v][d] += p.lambda[v][i] * m.point(cell[i])[d];
            }
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return where[a] < where[b]; });
            if (affine_rank(p, order) != k) continue;
            for (const auto& r : rows) {
                std::vector<bool> t(p.lambda.size());
                for (std::size_t v = 0; v < p.lambda.size(); ++v) t[v] = dot(r, p.lambda[v]) == 0;
                p.tight.push_back(std::move(t));
            }
            std::vector<std::vector<std::size_t>> simplices;
            pull(p, order, k, simplices);
            for (const auto& s : simplices) {
                linalg::Matrix e;
                for (std::size_t i = 1; i <= k; ++i) {
                    RationalVector d(k);
                    for (std::size_t c = 0; c < k; ++c) d[c] = p.lambda[s[i]][c + 1] - p.lambda[s[0]][c + 1];
                    e.push_back(std::move(d));
                }
                volume += abs(det(std::move(e)));
                emit(p.lambda, s, j);
            }
        }
        if (volume != 1) {
            out.covered = false;
            return out;
        }
    }
    return out;
}

std::optional<Rational> max_weight_in(const std::vector<RationalPoint>& pts, std::size_t i, const Polytope& t) {
    const std::size_t k = pts.size() - 1;
    linalg::Matrix rows;
    for (std::size_t j = 0; j <= k; ++j) {
        RationalVector u(k + 1, Rational(0));
        u[j] = 1;
        rows.push_back(std::move(u));
    }
    auto add = [&](const Constraint& c, int sign) {
        RationalVector s(k + 1);
        for (std::size_t j = 0; j <= k; ++j) s[j] = sign * c.slack(pts[j]);
        rows.push_back(std::move(s));
    };
    for (const auto& c : t.halfspaces.inequalities) add(c, 1);
    for (const auto& c : t.halfspaces.equalities) {
        add(c, 1);
        add(c, -1);
    }
    std::optional<Rational> best;
    for (const auto& v : enumerate_vertices(k, rows))
        if (!best || v[i] > *best) best = v[i];
    return best;
}

std::vector<RationalPoint> difference_barycenters(const std::vector<RationalPoint>& pts,
                                                  const std::vector<const Polytope*>& targets) {
    const std::size_t k = pts.size() - 1;
    linalg::Matrix base;
    for (std::size_t j = 0; j <= k; ++j) {
        RationalVector u(k + 1, Rational(0));
        u[j] = 1;
        base.push_back(std::move(u));
    }
    struct Part {
        linalg::Matrix rows;
        std::vector<RationalVector> vertices;
    };
    std::vector<Part> parts{{base, enumerate_vertices(k, base)}};
    // false when the part is not full-dimensional; otherwise drops added rows
    // tight at fewer than k vertices (not facets)
    auto clip = [&](Part& part) {
        part.vertices = enumerate_vertices(k, part.rows);
        if (part.vertices.size() <= k) return false;
        linalg::Matrix diffs;
        for (std::size_t v = 1; v < part.vertices.size(); ++v) diffs.push_back(part.vertices[v] - part.vertices[0]);
        if (linalg::rank(std::move(diffs)) != k) return false;
        linalg::Matrix kept(part.rows.begin(), part.rows.begin() + static_cast<long>(k + 1));
        for (std::size_t r = k + 1; r < part.rows.size(); ++r) {
            std::size_t tight = 0;
            for (const auto& v : part.vertices)
                if (dot(part.rows[r], v) == 0) ++tight;
            if (tight >= k) kept.push_back(std::move(part.rows[r]));
        }
        part.rows = std::move(kept);
        return true;
    };
    auto below = [](const RationalVector& h, const std::vector<RationalVector>& vs) {
        return std::any_of(vs.begin(), vs.end(), [&](const RationalVector& v) { return dot(h, v) < 0; });
    };
    for (const auto* t : targets) {
        linalg::Matrix hs;
        auto add = [&](const Constraint& c, int sign) {
            RationalVector s(k + 1);
            for (std::size_t j = 0; j <= k; ++j) s[j] = sign * c.slack(pts[j]);
            if (std::any_of(s.begin(), s.end(), [](const Rational& x) { return x < 0; })) hs.push_back(std::move(s));
        };
        for (const auto& c : t->halfspaces.inequalities) add(c, 1);
        for (const auto& c : t->halfspaces.equalities) {
            add(c, 1);
            add(c, -1);
        }
        std::vector<Part> next;
        for (auto& part : parts) {
            Part cur = std::move(part);
            for (const auto& h : hs) {
                if (!below(h, cur.vertices)) continue;
                Part neg{cur.rows, {}};
                RationalVector minus(k + 1);
                for (std::size_t j = 0; j <= k; ++j) minus[j] = -h[j];
                neg.rows.push_back(std::move(minus));
                if (clip(neg)) next.push_back(std::move(neg));
                cur.rows.push_back(h);
                if (!clip(cur)) break;
            }
        }
        parts = std::move(next);
    }
    std::vector<RationalPoint> out;
    for (const auto& part : parts) {
        RationalPoint x(pts.front().size(), Rational(0));
        const Rational w(Integer(1), Integer(part.vertices.size()));
        for (const auto& v : part.vertices)
            for (std::size_t j = 0; j <= k; ++j)
                if (v[j] != 0)
                    for (std::size_t d = 0; d < x.size(); ++d) x[d] += w * v[j] * pts[j][d];
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace nullary::detail
