// analysis.hpp -- structural analysis of strategies

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmdim/core.hpp"

namespace mmdim {

/// How often each coordinate's color occurs on its peg across the whole
/// strategy, e.g. (1,2,2) for a type-A question.
struct OccurrenceProfile
{
    std::array<int, kPegs> f{};

    int operator[](Peg peg) const { return f[static_cast<std::size_t>(peg)]; }
    friend bool operator==(const OccurrenceProfile&, const OccurrenceProfile&) = default;
};

/// A=(1,2,2) B=(2,1,2) C=(2,2,1) D=(2,1,1) E=(1,2,1) F=(1,1,2).
enum class QuestionType { A, B, C, D, E, F, Other };

char type_letter(QuestionType t);
QuestionType type_of(const OccurrenceProfile& profile);

/// For A, B and C: the peg whose color occurs once.
Peg single_peg(QuestionType t);

struct ClassifiedQuestion
{
    OccurrenceProfile profile;
    QuestionType type = QuestionType::Other;
};

std::vector<ClassifiedQuestion> classify_questions(const Strategy& strategy);

/// True iff every question is of type A, B or C.
bool is_abc_only(const Strategy& strategy);

enum class BlockShape { Path, Cycle, Other };

const char* to_string(BlockShape shape);

struct GraphEdge
{
    std::size_t u = 0;
    std::size_t v = 0;
    int multiplicity = 1; ///< 1 = neighboring, 2 = double-neighboring
};

struct Block
{
    std::vector<std::size_t> vertices; ///< ascending question indices
    BlockShape shape = BlockShape::Other;
};

/// Multigraph on question indices: one edge per pair agreeing on exactly one
/// peg, a double edge per pair agreeing on exactly two.
struct StrategyGraph
{
    std::size_t vertex_count = 0;
    std::vector<GraphEdge> edges;
    std::vector<Block> blocks; ///< ordered by smallest vertex

    /// Degree counting edge multiplicities.
    int degree(std::size_t v) const;
};

StrategyGraph build_strategy_graph(const Strategy& strategy);

/// Per peg, the colors in range that no question uses on that peg.
using MissingColors = std::array<std::vector<Color>, kPegs>;

MissingColors missing_colors(const Strategy& strategy);

struct PatternHit
{
    int pattern = 0;                 ///< 1..12
    std::vector<std::size_t> witness; ///< question indices
};

struct PatternReport
{
    /// False when some question is not of type A, B or C; hits is then empty.
    bool applicable = false;
    std::vector<PatternHit> hits; ///< ascending by pattern id

    bool has(int pattern) const;
};

/// Searches for the twelve forbidden configurations of ABC-only strategies.
/// A strategy of A/B/C questions avoiding all twelve is feasible; any hit
/// other than pattern 2 makes it infeasible.
PatternReport detect_patterns(const Strategy& strategy);

enum class Verdict { CertifiedFeasible, CertifiedInfeasible, Unknown };

const char* to_string(Verdict v);

struct Certificate
{
    Verdict verdict = Verdict::Unknown;
    std::optional<int> pattern; ///< smallest conclusive pattern when infeasible
};

/// Decides feasibility from the pattern report alone, without enumerating
/// secrets. Pattern 2 on its own is inconclusive.
Certificate certify_feasible(const Strategy& strategy);

struct FilterViolation
{
    char clause = '?'; ///< 'a'..'g'
    std::string detail;
};

/// Necessary conditions every feasible strategy satisfies, checked literally.
/// Returns the violated clauses (at most one entry per clause letter).
std::vector<FilterViolation> check_structural_filters(const Strategy& strategy);

/// Everything above bundled for reporting.
nlohmann::json analysis_json(const Strategy& strategy);
std::string analysis_text(const Strategy& strategy);

} // namespace mmdim
