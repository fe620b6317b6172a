#include "support.hpp"

#include <filesystem>

using namespace test;

namespace {

const UnificationProblem& problem() {
    static const UnificationProblem p = parse_problem(boundary_problem_text, 2);
    return p;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("nullary_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

bool same_verdicts(const ChainReport& a, const ChainReport& b) { return to_json(a) == to_json(b); }

}  // namespace

TEST_CASE("iota prime") {
    CHECK(evaluate(iota_prime(), pt({q(0)})) == pt({q(0), q(0)}));
    CHECK(evaluate(iota_prime(), pt({q(1)})) == pt({q(1), q(0)}));
    CHECK(evaluate(iota_prime(), pt({q(1, 3)})) == pt({q(1, 3), q(0)}));
    CHECK(degree(iota_prime()) == 1);
}

TEST_CASE("ascending chains") {
    const auto zero = ascending_chain(0, 2);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].degree == 1);
    CHECK(equals(zero[0].sigma, pad(iota_prime(), 2)));
    CHECK_FALSE(zero[0].alpha.has_value());

    ChainReport report;
    const auto three = ascending_chain(3, 2, &report);
    REQUIRE(three.size() == 4);
    CHECK(report.all_pass());
    CHECK(report.steps == 3);
    for (std::size_t i = 1; i < three.size(); ++i) {
        CHECK(three[i].index == i);
        CHECK(three[i].degree > three[i - 1].degree);
        CHECK(three[i].degree == degree(three[i].sigma));
    }

    try {
        ascending_chain(1, 1);
        FAIL("expected DimensionTooLow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionTooLow);
    }
}

TEST_CASE("chains in three variables") {
    ChainReport report;
    const auto c = ascending_chain(2, 3, &report);
    CHECK(report.all_pass());
    CHECK(report.n == 3);
    for (const auto& r : c) CHECK(r.sigma.dim() == 3);
}

TEST_CASE("verification") {
    const auto chain = ascending_chain(2, 2);
    CHECK(verify_chain(chain, problem()).all_pass());

    auto tampered = chain;
    tampered[1].sigma = constant_on_cube(2, pt({q(0), q(0)}));
    const ChainReport bad = verify_chain(tampered, problem());
    CHECK_FALSE(bad.all_pass());
    CHECK(bad.verdicts[1].unifier);
    CHECK_FALSE(bad.verdicts[1].composition);
    CHECK_FALSE(bad.verdicts[1].nonconstant);

    auto reordered = chain;
    std::swap(reordered[1], reordered[2]);
    CHECK_FALSE(verify_chain(reordered, problem()).all_pass());

    auto wrong_degree = chain;
    wrong_degree[2].degree += 1;
    const ChainReport d = verify_chain(wrong_degree, problem());
    CHECK_FALSE(d.verdicts[2].degree_matches);
    CHECK(d.verdicts[2].composition);

    const ChainReport empty = verify_chain({}, problem());
    CHECK(empty.all_pass());
    CHECK(empty.steps == 0);
    CHECK(empty.verdicts.empty());
}

TEST_CASE("serialization") {
    CHECK(to_json(tent()) ==
          R"({"codomain_dim":1,"dim":1,"simplices":[[0,1],[1,2]],"values":[["0"],["1/2"],["0"]],"vertices":[["0"],["1/2"],["1"]]})");
    CHECK(to_json(triangulate_cube(2)) == R"({"simplices":[[0,1,3],[0,2,3]],"vertices":[["0","0"],["0","1"],["1","0"],["1","1"]]})");
    CHECK(equals(zmap_from_json(to_json(tent())), tent()));

    auto bad = [](const std::string& text) {
        try {
            zmap_from_json(text);
        } catch (const Error& e) {
            return e.code() == ErrorCode::BadInput;
        }
        return false;
    };
    CHECK(bad("{"));
    CHECK(bad(R"({"codomain_dim":1,"dim":1,"simplices":[[0,1]],"values":[["0"],["1/2"]],"vertices":[["0"],["1/2"]]})"));
    CHECK(bad(R"({"codomain_dim":1,"dim":1,"simplices":[[0,1]],"values":[["0"],["1/3"]],"vertices":[["0"],["1"]]})"));
    CHECK(bad(R"({"codomain_dim":1,"dim":1,"simplices":[[0,1]],"values":[["0"],["1"]],"vertices":[["1"],["0"]]})"));
    CHECK(bad(R"({"codomain_dim":1,"dim":1,"simplices":[[0,1]],"values":[["0"],[1]],"vertices":[["0"],["1"]]})"));
    CHECK(bad(R"({"codomain_dim":1,"dim":1,"simplices":[[0,2]],"values":[["0"],["1"]],"vertices":[["0"],["1"]]})"));
}

TEST_CASE("round trip leaves verdicts unchanged", "[property]") {
    const auto chain = ascending_chain(3, 2);
    const ChainReport before = verify_chain(chain, problem());
    std::vector<ChainRecord> loaded;
    for (const auto& r : chain) {
        const std::string text = to_json(r);
        const ChainRecord back = record_from_json(text);
        CHECK(to_json(back) == text);
        loaded.push_back(back);
    }
    CHECK(same_verdicts(before, verify_chain(loaded, problem())));

    const auto dir = scratch("roundtrip");
    write_chain(dir, chain, before);
    const auto from_disk = read_chain(dir);
    REQUIRE(from_disk.size() == chain.size());
    CHECK(same_verdicts(before, verify_chain(from_disk, problem())));
    std::filesystem::remove_all(dir);
}

TEST_CASE("determinism", "[property]") {
    ChainReport ra, rb;
    const auto a = ascending_chain(3, 2, &ra);
    const auto b = ascending_chain(3, 2, &rb);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]) == to_json(b[i]));
    CHECK(to_json(ra) == to_json(rb));
}

TEST_CASE("degrees increase from one", "[property]") {
    ChainReport report;
    ascending_chain(4, 2, &report);
    REQUIRE(report.degrees.size() == 5);
    CHECK(report.degrees[0] == 1);
    for (std::size_t i = 1; i < report.degrees.size(); ++i) CHECK(report.degrees[i] > report.degrees[i - 1]);
}
