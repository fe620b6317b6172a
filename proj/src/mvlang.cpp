#include "nullary/mvlang.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "nullary/mesh.hpp"

namespace nullary {

using detail::Mesh;

Term make_constant(bool one) { return std::make_shared<TermNode>(TermNode{one ? Op::One : Op::Zero, 0, nullptr, nullptr}); }
Term make_var(std::size_t index) { return std::make_shared<TermNode>(TermNode{Op::Var, index, nullptr, nullptr}); }
Term make_not(Term t) { return std::make_shared<TermNode>(TermNode{Op::Not, 0, std::move(t), nullptr}); }
Term make_binary(Op op, Term a, Term b) {
    return std::make_shared<TermNode>(TermNode{op, 0, std::move(a), std::move(b)});
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t arity) : s_(text), arity_(arity) {}

    Term term() { return join(); }

    UnificationProblem problem() {
        UnificationProblem p;
        p.arity = arity_;
        do {
            Term a = term();
            expect("=");
            Term b = term();
            p.equations.emplace_back(std::move(a), std::move(b));
        } while (accept(";"));
        return p;
    }

    void finish() {
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

private:
    std::string_view s_;
    std::size_t arity_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::SyntaxError, "at position " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    Term join() {
        Term t = meet();
        while (accept("\\/")) t = make_binary(Op::Join, t, meet());
        return t;
    }
    Term meet() {
        Term t = osum();
        while (accept("/\\")) t = make_binary(Op::Meet, t, osum());
        return t;
    }
    Term osum() {
        Term t = oprod();
        while (accept("+")) t = make_binary(Op::Oplus, t, oprod());
        return t;
    }
    Term oprod() {
        Term t = unary();
        while (accept("*")) t = make_binary(Op::Odot, t, unary());
        return t;
    }
    Term unary() {
        if (accept("~")) return make_not(unary());
        return atom();
    }
    Term atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Term t = term();
            expect(")");
            return t;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return make_constant(c == '1');
        }
        if (c == 'x') {
            const std::size_t start = pos_++;
            std::size_t index = 0;
            std::size_t digits = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                index = index * 10 + static_cast<std::size_t>(s_[pos_++] - '0');
                if (++digits > 6) fail("variable index too long");
            }
            if (digits == 0) fail("expected digits after 'x'");
            if (index < 1 || index > arity_)
                throw Error(ErrorCode::ArityError, "variable x" + std::to_string(index) + " at position " +
                                                       std::to_string(start) + " exceeds arity " +
                                                       std::to_string(arity_));
            return make_var(index);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

int precedence(Op op) {
    switch (op) {
        case Op::Join: return 1;
        case Op::Meet: return 2;
        case Op::Oplus: return 3;
        case Op::Odot: return 4;
        case Op::Not: return 5;
        default: return 6;
    }
}

const char* symbol(Op op) {
    switch (op) {
        case Op::Join: return " \\/ ";
        case Op::Meet: return " /\\ ";
        case Op::Oplus: return " + ";
        case Op::Odot: return " * ";
        default: return "";
    }
}

void print(const Term& t, int min_prec, std::string& out) {
    const int p = precedence(t->op);
    const bool paren = p < min_prec;
    if (paren) out += '(';
    switch (t->op) {
        case Op::Zero: out += '0'; break;
        case Op::One: out += '1'; break;
        case Op::Var: out += "x" + std::to_string(t->var); break;
        case Op::Not:
            out += '~';
            print(t->left, p, out);
            break;
        default:
            print(t->left, p, out);
            out += symbol(t->op);
            print(t->right, p + 1, out);
    }
    if (paren) out += ')';
}

Rational combine(Op op, const Rational& a, const Rational& b) {
    switch (op) {
        case Op::Oplus: return std::min<Rational>(Rational(1), a + b);
        case Op::Odot: return std::max<Rational>(Rational(0), a + b - 1);
        case Op::Join: return std::max(a, b);
        case Op::Meet: return std::min(a, b);
        default: throw Error(ErrorCode::BadInput, "not a binary connective");
    }
}

void postorder(const Term& t, std::map<const TermNode*, std::size_t>& col, std::vector<Term>& order) {
    if (col.count(t.get())) return;
    if (t->left) postorder(t->left, col, order);
    if (t->right) postorder(t->right, col, order);
    col.emplace(t.get(), order.size());
    order.push_back(t);
}

void check_arity(std::size_t m) {
    if (m < 1 || m > 4) throw Error(ErrorCode::UnsupportedArity, "arity must be between 1 and 4");
}

// Kuhn mesh of [0,1]^m carrying one column per term node, subdivided so
// that every column is affine on every cell.
struct TermMesh {
    Mesh mesh;
    std::map<const TermNode*, std::size_t> col;
};

TermMesh build_term_mesh(const std::vector<Term>& roots, std::size_t m, std::size_t extra_columns) {
    std::map<const TermNode*, std::size_t> col;
    std::vector<Term> order;
    for (const auto& r : roots) postorder(r, col, order);
    Mesh mesh = Mesh::kuhn_box(IntegerVector(m, Integer(0)), IntegerVector(m, Integer(1)),
                               order.size() + extra_columns);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const TermNode& node = *order[i];
        if (node.op == Op::Oplus || node.op == Op::Odot || node.op == Op::Join || node.op == Op::Meet) {
            const std::size_t a = col.at(node.left.get()), b = col.at(node.right.get());
            if (node.op == Op::Oplus || node.op == Op::Odot)
                mesh.split_by([&](std::size_t v) -> Rational { return mesh.data(v)[a] + mesh.data(v)[b] - 1; });
            else
                mesh.split_by([&](std::size_t v) -> Rational { return mesh.data(v)[a] - mesh.data(v)[b]; });
        }
        for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
            auto& row = mesh.data(v);
            switch (node.op) {
                case Op::Zero: row[i] = 0; break;
                case Op::One: row[i] = 1; break;
                case Op::Var: row[i] = mesh.point(v)[node.var - 1]; break;
                case Op::Not: row[i] = 1 - row[col.at(node.left.get())]; break;
                default: row[i] = combine(node.op, row[col.at(node.left.get())], row[col.at(node.right.get())]);
            }
        }
    }
    return {std::move(mesh), std::move(col)};
}

}  // namespace

Term parse(std::string_view text, std::size_t arity) {
    Parser p(text, arity);
    Term t = p.term();
    p.finish();
    return t;
}

UnificationProblem parse_problem(std::string_view text, std::size_t arity) {
    Parser p(text, arity);
    UnificationProblem out = p.problem();
    p.finish();
    return out;
}

std::string to_string(const Term& t) {
    std::string out;
    print(t, 0, out);
    return out;
}

std::string to_string(const UnificationProblem& p) {
    std::string out;
    for (std::size_t i = 0; i < p.equations.size(); ++i) {
        if (i) out += "; ";
        out += to_string(p.equations[i].first) + " = " + to_string(p.equations[i].second);
    }
    return out;
}

Rational evaluate(const Term& t, const RationalPoint& x) {
    switch (t->op) {
        case Op::Zero: return 0;
        case Op::One: return 1;
        case Op::Var:
            if (t->var < 1 || t->var > x.size()) throw Error(ErrorCode::ArityError, "variable out of range");
            return x[t->var - 1];
        case Op::Not: return 1 - evaluate(t->left, x);
        default: return combine(t->op, evaluate(t->left, x), evaluate(t->right, x));
    }
}

ZMap mcnaughton(const Term& t, std::size_t arity) {
    check_arity(arity);
    TermMesh tm = build_term_mesh({t}, arity, 0);
    tm.mesh.desingularize();
    std::vector<detail::DataRow> data;
    SimplicialComplex c = tm.mesh.to_complex(&data);
    const std::size_t root = tm.col.at(t.get());
    std::vector<RationalPoint> values;
    for (const auto& row : data) values.push_back({row[root]});
    return extend_vertex_map(RegularTriangulation::certify(std::move(c)), std::move(values));
}

Polyhedron solution_polyhedron(const UnificationProblem& p) {
    check_arity(p.arity);
    std::vector<Term> roots;
    for (const auto& [a, b] : p.equations) {
        roots.push_back(a);
        roots.push_back(b);
    }
    TermMesh tm = build_term_mesh(roots, p.arity, p.equations.size());
    Mesh& mesh = tm.mesh;
    const std::size_t base = mesh.width() - p.equations.size();
    for (std::size_t e = 0; e < p.equations.size(); ++e) {
        const std::size_t a = tm.col.at(p.equations[e].first.get());
        const std::size_t b = tm.col.at(p.equations[e].second.get());
        for (std::size_t v = 0; v < mesh.vertex_count(); ++v) mesh.data(v)[base + e] = mesh.data(v)[a] - mesh.data(v)[b];
        mesh.split_by([&](std::size_t v) -> Rational { return mesh.data(v)[base + e]; });
    }
    mesh.keep_faces([&](const Cell& f) {
        return std::all_of(f.begin(), f.end(), [&](std::size_t v) {
            for (std::size_t e = 0; e < p.equations.size(); ++e)
                if (mesh.data(v)[base + e] != 0) return false;
            return true;
        });
    });
    Polyhedron out;
    out.ambient_dim = p.arity;
    SimplicialComplex c = mesh.to_complex();
    for (const auto& cell : c.simplices) out.pieces.push_back(c.simplex(cell).polytope());
    return out;
}

bool check_unifier(const UnificationProblem& p, const ZMap& sigma) {
    if (sigma.codomain_dim() != p.arity)
        throw Error(ErrorCode::DimensionMismatch, "unifier codomain differs from problem arity");
    const Polyhedron bs = solution_polyhedron(p);
    if (bs.pieces.empty()) return false;
    return is_into(sigma, bs);
}

}  // namespace nullary
