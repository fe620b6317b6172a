// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "../tests/oracles.hpp"

using namespace nullary;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.ok && seconds >= limit_seconds) {
        out.ok = false;
        out.detail = "over the time limit";
    }
    if (!out.ok) ++failures;
    std::printf("%s %d %s (%.2f s of %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", number, title, seconds, limit_seconds,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
}

Rational q(long p, long d = 1) { return make_rational(p, d); }

// ---- criterion 1: a convex piece lies in the boundary iff it lies in one edge

const std::vector<std::pair<RationalPoint, RationalPoint>> edges = {
    {{q(0), q(0)}, {q(1), q(0)}}, {{q(1), q(0)}, {q(1), q(1)}}, {{q(0), q(1)}, {q(1), q(1)}}, {{q(0), q(0)}, {q(0), q(1)}}};

std::optional<Rational> edge_parameter(const RationalPoint& x, std::size_t e) {
    const auto& [a, b] = edges[e];
    const std::size_t free = a[0] == b[0] ? 1 : 0;
    const std::size_t fixed = 1 - free;
    if (x[fixed] != a[fixed] || x[free] < 0 || x[free] > 1) return std::nullopt;
    return x[free];
}

bool equals_boundary(const Polyhedron& p, Outcome& out) {
    std::vector<std::vector<std::pair<Rational, Rational>>> covered(4);
    for (const auto& piece : p.pieces) {
        bool placed = false;
        for (std::size_t e = 0; e < 4; ++e) {
            std::optional<Rational> lo, hi;
            bool inside = true;
            for (const auto& v : piece.vertices) {
                const auto t = edge_parameter(v, e);
                if (!t) {
                    inside = false;
                    break;
                }
                if (!lo || *t < *lo) lo = t;
                if (!hi || *t > *hi) hi = t;
            }
            if (inside) {
                covered[e].push_back({*lo, *hi});
                placed = true;
            }
        }
        out.require(placed, "a piece leaves the boundary");
    }
    for (auto& intervals : covered) {
        std::sort(intervals.begin(), intervals.end());
        Rational reach = 0;
        for (const auto& [lo, hi] : intervals) {
            if (lo > reach) break;
            reach = std::max(reach, hi);
        }
        out.require(reach == 1, "an edge of the boundary is not covered");
    }
    return out.ok;
}

// ---- criterion 4: affine interpolation by Cramer's rule

std::vector<Rational> interpolate(const std::vector<RationalPoint>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<std::vector<Rational>> a;
    for (const auto& x : xs) {
        std::vector<Rational> row{Rational(1)};
        row.insert(row.end(), x.begin(), x.end());
        a.push_back(std::move(row));
    }
    const Rational d = oracle::det(a);
    std::vector<Rational> out;
    for (std::size_t c = 0; c < n; ++c) {
        auto m = a;
        for (std::size_t r = 0; r < n; ++r) m[r][c] = ys[r];
        out.push_back(oracle::det(m) / d);
    }
    return out;
}

RegularTriangulation random_square_triangulation(std::mt19937& rng) {
    SimplicialComplex k = triangulate_cube(2).complex();
    const std::size_t blowups = 1 + rng() % 6;
    for (std::size_t i = 0; i < blowups; ++i) {
        const auto faces = k.faces();
        k = blowup(k, k.simplex(faces[rng() % faces.size()]));
    }
    return RegularTriangulation::certify(std::move(k));
}

// ---- criterion 9

std::string read_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool same_directories(const std::filesystem::path& a, const std::filesystem::path& b) {
    std::vector<std::string> na, nb;
    for (const auto& e : std::filesystem::directory_iterator(a)) na.push_back(e.path().filename().string());
    for (const auto& e : std::filesystem::directory_iterator(b)) nb.push_back(e.path().filename().string());
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    if (na != nb) return false;
    for (const auto& f : na)
        if (read_bytes(a / f) != read_bytes(b / f)) return false;
    return true;
}

}  // namespace

int main() {
    const UnificationProblem problem = parse_problem(boundary_problem_text, 2);
    std::vector<ChainRecord> chain;
    ChainReport chain_report;

    criterion(1, "dualization of the boundary problem equals the square's boundary", 10, [&](Outcome& out) {
        const Polyhedron b = solution_polyhedron(problem);
        equals_boundary(b, out);
    });

    criterion(2, "ascending chain of length 5 in 2 variables is certified", 300, [&](Outcome& out) {
        chain = ascending_chain(5, 2, &chain_report);
        out.require(chain.size() == 6, "wrong number of records");
        const ChainReport again = verify_chain(chain, problem);
        out.require(again.all_pass(), "re-verification failed");
        out.require(again.degrees.front() == 1, "first degree is not 1");
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const auto& v = again.verdicts[i];
            out.require(v.unifier && v.composition && v.nonconstant && v.degree_increases,
                        "step " + std::to_string(i) + " failed a check");
        }
    });

    criterion(3, "every emitted triangulation is regular", 120, [&](Outcome& out) {
        std::mt19937 rng(101);
        auto check = [&](const SimplicialComplex& c, const std::string& what) {
            out.require(oracle::regular(c), what + " is not regular");
        };
        for (std::size_t n = 1; n <= 4; ++n) check(triangulate_cube(n).complex(), "cube triangulation");
        for (int i = 0; i < 20; ++i) {
            std::vector<RationalPoint> tri;
            for (int j = 0; j < 3; ++j) tri.push_back(oracle::random_point(rng, 2, 6));
            if (!affinely_independent(tri)) continue;
            check(joint_refinement({unit_cube(2), Polyhedron::from_points(2, {tri})}).complex(), "joint refinement");
        }
        for (int i = 0; i < 10; ++i) {
            std::vector<RationalPoint> tet;
            for (int j = 0; j < 4; ++j) tet.push_back(oracle::random_point(rng, 3, 3));
            if (!affinely_independent(tet)) continue;
            check(joint_refinement({unit_cube(3), Polyhedron::from_points(3, {tet})}).complex(), "joint refinement");
        }
        for (int i = 0; i < 30; ++i) {
            const std::size_t n = 1 + i % 3;
            check(insert_vertex(triangulate_cube(n), oracle::random_point(rng, n, 12)).complex(), "insert_vertex");
        }
        for (int i = 0; i < 20; ++i) {
            const auto ctx = oracle::random_context(rng, 2 + i % 2);
            check(squeeze(ctx).rho.complex(), "squeeze");
        }
        for (int i = 0; i < 40; ++i) {
            const std::size_t m = 1 + i % 3;
            check(mcnaughton(oracle::random_term(rng, 4, m), m).complex(), "McNaughton map");
        }
        check(make_space(coordinate_map(2, {0})).alpha.complex(), "make_space");
        const UpperBound u = exists_upper_bound(coordinate_map(2, {1}), Integer(4));
        check(u.theta.complex(), "upper bound");
        check(u.alpha.complex(), "upper bound witness");
        for (const auto& r : chain) {
            check(r.sigma.complex(), "chain unifier");
            if (r.alpha) check(r.alpha->complex(), "chain witness");
        }
    });

    criterion(4, "unique extension of 100 denominator-compatible vertex maps", 60, [&](Outcome& out) {
        std::mt19937 rng(103);
        std::uniform_int_distribution<long> numerator(-40, 40);
        for (int i = 0; i < 100; ++i) {
            const RegularTriangulation t = random_square_triangulation(rng);
            const std::size_t codim = 1 + i % 2;
            std::vector<RationalPoint> values;
            for (const auto& v : t.vertices()) {
                RationalPoint y;
                for (std::size_t j = 0; j < codim; ++j) {
                    Rational r(Integer(numerator(rng)), denominator(v));
                    r.canonicalize();
                    y.push_back(r);
                }
                values.push_back(std::move(y));
            }
            const ZMap g = extend_vertex_map(t, values);
            out.require(g.values() == values, "values changed");
            for (const auto& piece : g.pieces()) {
                std::vector<RationalPoint> xs;
                for (auto v : piece.cell) xs.push_back(t.vertices()[v]);
                for (std::size_t j = 0; j < codim; ++j) {
                    std::vector<Rational> ys;
                    for (auto v : piece.cell) ys.push_back(values[v][j]);
                    const auto coef = interpolate(xs, ys);
                    for (std::size_t c = 0; c < coef.size(); ++c) {
                        out.require(coef[c].get_den() == 1, "non-integer coefficient");
                        out.require(coef[c] == Rational(piece.coefficients[j][c]), "stored piece disagrees");
                    }
                }
            }
            const ZMap again = extend_vertex_map(g.domain(), g.values());
            out.require(again == g && again.pieces() == g.pieces(), "re-extension differs");
        }
    });

    criterion(5, "equal-denominator recipe on 1000 random instances", 30, [&](Outcome& out) {
        std::mt19937 rng(107);
        for (int i = 0; i < 1000; ++i) {
            const std::size_t n = 1 + rng() % 4;
            RationalPoint t;
            RationalVector v, w;
            for (std::size_t j = 0; j < n; ++j) t.push_back(oracle::random_rational(rng, 20, -3, 3));
            do {
                v.clear();
                for (std::size_t j = 0; j < n; ++j) v.push_back(oracle::random_rational(rng, 20, -3, 3));
            } while (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }));
            for (std::size_t j = 0; j < n; ++j) w.push_back(oracle::random_rational(rng, 20, -3, 3));
            Rational eps = oracle::random_rational(rng, 20, 0, 2);
            if (eps == 0) eps = q(1, 20);
            const auto [delta, tau] = equal_denominator_points(t, v, w, eps);
            out.require(delta > 0 && delta < eps && tau > 0 && tau < eps, "step outside (0, eps)");
            const RationalPoint a = t + delta * v;
            out.require(denominator(a) == denominator(a + tau * w), "denominators differ");
        }
    });

    criterion(6, "squeezing contract on 24 contexts in dimensions 2 and 3", 120, [&](Outcome& out) {
        std::mt19937 rng(109);
        for (int i = 0; i < 24; ++i) {
            const auto ctx = oracle::random_context(rng, 2 + i % 2);
            const auto verdict = oracle::squeeze_contract(ctx, squeeze(ctx));
            const std::string id = "context " + std::to_string(i);
            out.require(verdict.preserves_eta, id + ": eta o rho != eta");
            out.require(verdict.misses_y, id + ": y is in the image");
            out.require(verdict.fixes_other_facets, id + ": moves another facet");
        }
    });

    criterion(7, "McNaughton maps match term semantics (500 terms x 50 points)", 120, [&](Outcome& out) {
        std::mt19937 rng(113);
        for (int i = 0; i < 500; ++i) {
            const std::size_t m = 1 + rng() % 3;
            const Term t = oracle::random_term(rng, rng() % 6, m);
            const ZMap g = mcnaughton(t, m);
            for (int j = 0; j < 50; ++j) {
                const RationalPoint x = oracle::random_point(rng, m, 30);
                out.require(evaluate(g, x) == RationalPoint{oracle::semantics(t, x)}, "mismatch for " + to_string(t));
            }
        }
    });

    criterion(8, "lifts, degrees and degree monotonicity", 60, [&](Outcome& out) {
        std::mt19937 rng(127);
        const ZMap wrap = compose(zeta_segment(0, 4), extend_vertex_map(triangulate_cube(1), {{q(0)}, {q(4)}}));
        const ZMap constant = constant_map(triangulate_cube(2), {q(1), q(0)});
        std::vector<ZMap> cases{iota_prime(), wrap, constant};
        for (const auto& r : chain) cases.push_back(r.sigma);
        for (const auto& eta : cases) {
            const Lift l = lift(eta);
            for (const auto& v : l.map.complex().vertices)
                out.require(zeta(evaluate(l.map, v)[0]) == evaluate(eta, v), "lift wrong at a vertex");
            for (int i = 0; i < 100; ++i) {
                const RationalPoint x = oracle::random_point(rng, eta.dim(), 40);
                out.require(zeta(evaluate(l.map, x)[0]) == evaluate(eta, x), "lift wrong at a random point");
            }
        }
        out.require(degree(iota_prime()) == 1, "dg(iota') != 1");
        out.require(degree(wrap) == 4, "dg(wrap) != 4");
        out.require(degree(constant) == 0, "dg(constant) != 0");
        out.require(!chain.empty(), "no chain from criterion 2");
        for (std::size_t i = 1; i < chain.size(); ++i)
            out.require(degree(chain[i - 1].sigma) < degree(chain[i].sigma), "degree does not grow");
    });

    criterion(9, "two chain runs are byte-identical", 600, [&](Outcome& out) {
        const auto root = std::filesystem::temp_directory_path() / "nullary_acceptance";
        std::filesystem::remove_all(root);
        for (const char* run : {"a", "b"}) {
            ChainReport report;
            const auto records = ascending_chain(5, 2, &report);
            write_chain(root / run, records, report);
        }
        out.require(same_directories(root / "a", root / "b"), "chain directories differ");
        std::filesystem::remove_all(root);
    });

    return failures == 0 ? 0 : 1;
}
