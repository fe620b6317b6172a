#include "nullary/chain.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nullary {

using nlohmann::json;

ZMap iota_prime() {
    SimplicialComplex c;
    c.ambient_dim = 1;
    c.vertices = {{Rational(0)}, {Rational(1)}};
    c.simplices = {{0, 1}};
    return extend_vertex_map(RegularTriangulation::certify(std::move(c)), {make_point({0, 0}), make_point({1, 0})});
}

std::vector<ChainRecord> ascending_chain(std::size_t k, std::size_t n, ChainReport* report) {
    if (n < 2 || n > 4) throw Error(ErrorCode::DimensionTooLow, "chains need 2 <= n <= 4, got " + std::to_string(n));
    std::vector<ChainRecord> out;
    ZMap sigma = pad(iota_prime(), n);
    out.push_back({0, sigma, std::nullopt, degree(sigma)});
    for (std::size_t i = 1; i <= k; ++i) {
        Generalization g = generalize(out.back().sigma);
        const Rational d = degree(g.theta);
        out.push_back({i, std::move(g.theta), std::move(g.alpha), d});
    }
    ChainReport checked = verify_chain(out, parse_problem(boundary_problem_text, 2));
    if (!checked.all_pass()) throw Error(ErrorCode::VerificationFailed, "emitted chain failed verification");
    if (report) *report = std::move(checked);
    return out;
}

bool ChainReport::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const StepVerdict& v) { return v.pass(); });
}

ChainReport verify_chain(const std::vector<ChainRecord>& records, const UnificationProblem& problem) {
    ChainReport report;
    report.problem = to_string(problem);
    report.steps = records.empty() ? 0 : records.size() - 1;
    report.n = records.empty() ? 0 : records.front().sigma.dim();
    const Polyhedron cube = unit_cube(std::max<std::size_t>(report.n, 1));
    std::optional<Rational> previous;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const ChainRecord& r = records[i];
        StepVerdict v;
        auto guard = [](auto&& f) {
            try {
                return f();
            } catch (const Error&) {
                return false;
            }
        };
        const bool shape = r.index == i && r.sigma.dim() == report.n && (i == 0) == !r.alpha.has_value();
        v.unifier = shape && guard([&] { return check_unifier(problem, r.sigma); });
        std::optional<Rational> d;
        try {
            d = degree(r.sigma);
        } catch (const Error&) {
        }
        report.degrees.push_back(d ? *d : Rational(-1));
        v.degree_matches = d && *d == r.degree;
        v.nonconstant = guard([&] { return nonconstant_on_corners(r.sigma); });
        if (i == 0) {
            v.composition = shape;
            v.alpha_into_cube = shape;
            v.degree_increases = d && *d == 1;
        } else {
            const ZMap* alpha = r.alpha ? &*r.alpha : nullptr;
            v.alpha_into_cube = shape && alpha->dim() == report.n && alpha->codomain_dim() == report.n &&
                                guard([&] { return is_into(*alpha, cube); });
            v.composition = v.alpha_into_cube &&
                            guard([&] { return composition_equals(r.sigma, *alpha, records[i - 1].sigma); });
            v.degree_increases = d && previous && *d > *previous;
        }
        previous = d;
        report.verdicts.push_back(v);
    }
    return report;
}

namespace {

json rational_json(const Rational& q) { return to_string(q); }

json point_json(const RationalPoint& p) {
    json a = json::array();
    for (const auto& x : p) a.push_back(rational_json(x));
    return a;
}

json points_json(const std::vector<RationalPoint>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(point_json(p));
    return a;
}

json triangulation_json(const SimplicialComplex& c) {
    json cells = json::array();
    for (const auto& s : c.simplices) cells.push_back(s);
    return {{"simplices", std::move(cells)}, {"vertices", points_json(c.vertices)}};
}

json zmap_json(const ZMap& g) {
    json j = triangulation_json(g.complex());
    j["codomain_dim"] = g.codomain_dim();
    j["dim"] = g.dim();
    j["values"] = points_json(g.values());
    return j;
}

json record_json(const ChainRecord& r) {
    return {{"alpha", r.alpha ? zmap_json(*r.alpha) : json(nullptr)},
            {"degree", rational_json(r.degree)},
            {"index", r.index},
            {"sigma", zmap_json(r.sigma)}};
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

Rational rational_of(const json& j) {
    if (!j.is_string()) bad("rational must be a string");
    return parse_rational(j.get<std::string>());
}

std::size_t size_of(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) bad(std::string("missing or bad '") + key + "'");
    return j[key].get<std::size_t>();
}

std::vector<RationalPoint> points_of(const json& j, const char* key, std::size_t width) {
    if (!j.contains(key) || !j[key].is_array()) bad(std::string("missing or bad '") + key + "'");
    std::vector<RationalPoint> out;
    for (const auto& p : j[key]) {
        if (!p.is_array() || p.size() != width) bad(std::string("bad point in '") + key + "'");
        RationalPoint x;
        for (const auto& c : p) x.push_back(rational_of(c));
        out.push_back(std::move(x));
    }
    return out;
}

// A regular triangulation of [0,1]^dim: sorted distinct vertices in the cube,
// well-formed cells, total volume 1.
RegularTriangulation cube_triangulation_of(const json& j, std::size_t dim) {
    SimplicialComplex c;
    c.ambient_dim = dim;
    c.vertices = points_of(j, "vertices", dim);
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i && !(c.vertices[i - 1] < c.vertices[i])) bad("vertices are not sorted and distinct");
        for (const auto& x : c.vertices[i])
            if (x < 0 || x > 1) bad("vertex outside the unit cube");
    }
    if (!j.contains("simplices") || !j["simplices"].is_array()) bad("missing or bad 'simplices'");
    for (const auto& s : j["simplices"]) {
        if (!s.is_array() || s.size() != dim + 1) bad("simplex of wrong size");
        Cell cell;
        for (const auto& v : s) {
            if (!v.is_number_unsigned() || v.get<std::size_t>() >= c.vertices.size()) bad("bad vertex index");
            cell.push_back(v.get<std::size_t>());
        }
        if (!std::is_sorted(cell.begin(), cell.end()) || std::adjacent_find(cell.begin(), cell.end()) != cell.end())
            bad("simplex indices are not ascending");
        c.simplices.push_back(std::move(cell));
    }
    if (!std::is_sorted(c.simplices.begin(), c.simplices.end())) bad("simplices are not sorted");
    RegularTriangulation t;
    try {
        t = RegularTriangulation::certify(std::move(c));
    } catch (const Error& e) {
        bad(e.what());
    }
    // a regular simplex has volume 1 / (dim! * product of vertex denominators)
    Rational volume = 0;
    Integer factorial = 1;
    for (std::size_t i = 2; i <= dim; ++i) factorial *= static_cast<unsigned long>(i);
    for (const auto& s : t.simplices()) {
        Integer d = factorial;
        for (auto v : s) d *= denominator(t.vertices()[v]);
        volume += Rational(Integer(1), d);
    }
    if (volume != 1) bad("simplices do not tile the unit cube");
    return t;
}

ZMap zmap_of(const json& j) {
    if (!j.is_object()) bad("Z-map must be an object");
    const std::size_t dim = size_of(j, "dim");
    const std::size_t codim = size_of(j, "codomain_dim");
    if (dim == 0) bad("dimension must be positive");
    RegularTriangulation t = cube_triangulation_of(j, dim);
    std::vector<RationalPoint> values = points_of(j, "values", codim);
    if (values.size() != t.vertices().size()) bad("one value per vertex expected");
    try {
        return extend_vertex_map(t, std::move(values));
    } catch (const Error& e) {
        bad(e.what());
    }
}

ChainRecord record_of(const json& j) {
    if (!j.is_object() || !j.contains("sigma") || !j.contains("alpha") || !j.contains("degree")) bad("bad chain step");
    ChainRecord r;
    r.index = size_of(j, "index");
    r.sigma = zmap_of(j["sigma"]);
    if (!j["alpha"].is_null()) r.alpha = zmap_of(j["alpha"]);
    r.degree = rational_of(j["degree"]);
    return r;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) bad("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text << '\n';
    if (!out) bad("cannot write " + p.string());
}

}  // namespace

std::string to_json(const RegularTriangulation& t) { return triangulation_json(t.complex()).dump(); }
std::string to_json(const ZMap& g) { return zmap_json(g).dump(); }

std::string to_json(const Polyhedron& p) {
    json pieces = json::array();
    for (const auto& piece : p.pieces) pieces.push_back(json{{"vertices", points_json(piece.vertices)}});
    return json{{"dim", p.ambient_dim}, {"pieces", std::move(pieces)}}.dump();
}

std::string to_json(const ChainRecord& r) { return record_json(r).dump(); }

std::string to_json(const ChainReport& r) {
    json degrees = json::array();
    for (const auto& d : r.degrees) degrees.push_back(rational_json(d));
    json steps = json::array();
    for (const auto& v : r.verdicts)
        steps.push_back({{"alpha_into_cube", v.alpha_into_cube},
                         {"composition", v.composition},
                         {"degree_increases", v.degree_increases},
                         {"degree_matches", v.degree_matches},
                         {"nonconstant_on_corners", v.nonconstant},
                         {"pass", v.pass()},
                         {"unifier", v.unifier}});
    return json{{"all_pass", r.all_pass()}, {"degrees", std::move(degrees)}, {"n", r.n},
                {"problem", r.problem},     {"steps", r.steps},               {"verdicts", std::move(steps)}}
        .dump();
}

ZMap zmap_from_json(std::string_view text) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("sigma")) return zmap_of(j["sigma"]);
    return zmap_of(j);
}

ChainRecord record_from_json(std::string_view text) { return record_of(parse_json(text)); }

void write_chain(const std::filesystem::path& dir, const std::vector<ChainRecord>& records, const ChainReport& report) {
    std::filesystem::create_directories(dir);
    for (const auto& r : records) write_file(dir / ("step_" + std::to_string(r.index) + ".json"), to_json(r));
    write_file(dir / "report.json", to_json(report));
}

std::vector<ChainRecord> read_chain(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) bad(dir.string() + " is not a directory");
    std::vector<ChainRecord> out;
    for (std::size_t i = 0;; ++i) {
        const auto p = dir / ("step_" + std::to_string(i) + ".json");
        if (!std::filesystem::exists(p)) break;
        out.push_back(record_from_json(read_file(p)));
    }
    return out;
}

}  // namespace nullary
