#pragma once

// Strictly ascending chains of unifiers of the boundary-of-the-square problem,
// their independent re-verification and canonical JSON serialization.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nullary/cover.hpp"
#include "nullary/mvlang.hpp"

namespace nullary {

/// x |-> (x, 0) on the one-edge triangulation of [0,1].
ZMap iota_prime();

/// "x1 \/ x2 \/ ~x1 \/ ~x2 = 1", whose solutions form the boundary of the square.
inline constexpr std::string_view boundary_problem_text = "x1 \\/ x2 \\/ ~x1 \\/ ~x2 = 1";

struct ChainRecord {
    std::size_t index = 0;
    ZMap sigma;                 // [0,1]^n -> B
    std::optional<ZMap> alpha;  // sigma o alpha == previous sigma; absent at index 0
    Rational degree;
};

struct ChainReport;

/// k+1 records starting at iota' padded to n variables, 2 <= n <= 4. Throws
/// VerificationFailed if the finished chain does not verify.
std::vector<ChainRecord> ascending_chain(std::size_t k, std::size_t n, ChainReport* report = nullptr);

struct StepVerdict {
    bool unifier = false;
    bool composition = false;   // vacuous at index 0
    bool alpha_into_cube = false;
    bool degree_matches = false;
    bool degree_increases = false;  // at index 0: degree is 1
    bool nonconstant = false;

    bool pass() const {
        return unifier && composition && alpha_into_cube && degree_matches && degree_increases && nonconstant;
    }
};

struct ChainReport {
    std::string problem;
    std::size_t n = 0;
    std::size_t steps = 0;
    std::vector<Rational> degrees;
    std::vector<StepVerdict> verdicts;

    bool all_pass() const;
};

ChainReport verify_chain(const std::vector<ChainRecord>& records, const UnificationProblem& problem);

std::string to_json(const RegularTriangulation& t);
std::string to_json(const ZMap& g);
std::string to_json(const Polyhedron& p);
std::string to_json(const ChainRecord& r);
std::string to_json(const ChainReport& r);

/// Accepts a bare Z-map object or a chain step (its "sigma" is used). Throws BadInput.
ZMap zmap_from_json(std::string_view text);
ChainRecord record_from_json(std::string_view text);

/// Writes step_<i>.json and report.json.
void write_chain(const std::filesystem::path& dir, const std::vector<ChainRecord>& records, const ChainReport& report);
/// Reads step_0.json, step_1.json, ... until the first missing index.
std::vector<ChainRecord> read_chain(const std::filesystem::path& dir);

}  // namespace nullary
