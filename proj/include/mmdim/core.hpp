// core.hpp -- game semantics of static black-peg (a,b,c)-Mastermind

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mmdim {

/// Number of pegs in every code. The whole library is specialised to three.
inline constexpr int kPegs = 3;

/// A color index. Colors are 1-based on every peg.
using Color = int;

/// Peg index in [0, kPegs).
using Peg = int;

/// Number of colors per peg: the triple (a,b,c).
class Params
{
public:
    /// Throws std::invalid_argument unless every count is at least 1.
    Params(int a, int b, int c);
    explicit Params(const std::array<int, kPegs>& counts);

    int a() const { return counts_[0]; }
    int b() const { return counts_[1]; }
    int c() const { return counts_[2]; }
    int colors(Peg peg) const { return counts_.at(static_cast<std::size_t>(peg)); }
    const std::array<int, kPegs>& counts() const { return counts_; }

    /// a*b*c, the number of secrets (and of possible questions).
    std::int64_t secret_count() const;

    bool is_canonical() const { return a() <= b() && b() <= c(); }

    /// Same params with one peg's color count replaced.
    Params with_colors(Peg peg, int count) const;

    friend auto operator<=>(const Params&, const Params&) = default;

private:
    std::array<int, kPegs> counts_;
};

std::ostream& operator<<(std::ostream& os, const Params& p);
std::string to_string(const Params& p);

/// A peg permutation: `order[i]` is the original peg placed at position i.
using PegOrder = std::array<Peg, kPegs>;

inline constexpr PegOrder kIdentityOrder{0, 1, 2};

/// Result of sorting the pegs of a Params ascending. The permutation is kept
/// so strategies built for the sorted triple can be mapped back.
struct CanonicalParams
{
    Params params;
    PegOrder order;

    bool reordered() const { return order != kIdentityOrder; }
};

/// Stable ascending sort of the pegs by color count.
CanonicalParams canonicalize(const Params& p);

/// A code (q1,q2,q3). Questions and secrets share this type.
struct Question
{
    std::array<Color, kPegs> pegs{1, 1, 1};

    Question() = default;
    constexpr Question(Color p1, Color p2, Color p3) : pegs{p1, p2, p3} {}
    explicit constexpr Question(const std::array<Color, kPegs>& p) : pegs(p) {}

    Color operator[](Peg peg) const { return pegs[static_cast<std::size_t>(peg)]; }
    Color& operator[](Peg peg) { return pegs[static_cast<std::size_t>(peg)]; }

    /// True iff every coordinate lies in its peg's color range.
    bool valid_for(const Params& p) const;

    friend auto operator<=>(const Question&, const Question&) = default;
};

std::ostream& operator<<(std::ostream& os, const Question& q);
std::string to_string(const Question& q);

/// Apply a peg permutation: result[i] = q[order[i]].
Question permute(const Question& q, const PegOrder& order);
/// Inverse of permute(): result[order[i]] = q[i].
Question unpermute(const Question& q, const PegOrder& order);

/// Number of black pegs: positions where s and q agree.
constexpr int match_count(const Question& s, const Question& q)
{
    return int(s.pegs[0] == q.pegs[0]) + int(s.pegs[1] == q.pegs[1]) + int(s.pegs[2] == q.pegs[2]);
}

/// Dense index of a secret in lexicographic order, 0-based.
std::int64_t secret_index(const Params& p, const Question& s);
/// Inverse of secret_index.
Question secret_at(const Params& p, std::int64_t index);

/// An ordered list of pairwise distinct questions, all valid for `params`.
class Strategy
{
public:
    explicit Strategy(Params params);
    /// Throws std::out_of_range for a color outside its peg's range and
    /// std::invalid_argument for a repeated question.
    Strategy(Params params, std::vector<Question> questions);

    const Params& params() const { return params_; }
    const std::vector<Question>& questions() const { return questions_; }
    std::size_t size() const { return questions_.size(); }
    bool empty() const { return questions_.empty(); }
    const Question& operator[](std::size_t i) const { return questions_[i]; }

    auto begin() const { return questions_.begin(); }
    auto end() const { return questions_.end(); }

    bool contains(const Question& q) const;

    /// Appends q; same validation as the constructor.
    void add(const Question& q);

    /// Questions in ascending lexicographic order (set view).
    std::vector<Question> sorted_questions() const;

    friend bool operator==(const Strategy&, const Strategy&) = default;

private:
    Params params_;
    std::vector<Question> questions_;
};

/// Map a strategy for canonical params back to the caller's peg order.
Strategy unpermute(const Strategy& s, const CanonicalParams& canon);
/// Map a strategy into canonical peg order.
Strategy permute(const Strategy& s, const CanonicalParams& canon);

/// Black-peg counts of one secret against each question, in strategy order.
struct Signature
{
    std::vector<std::uint8_t> counts;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Throws std::out_of_range if the secret is not valid for the strategy's params.
Signature signature(const Strategy& strategy, const Question& secret);

struct FeasibilityResult
{
    bool feasible = true;
    /// Lexicographically smallest pair of distinct secrets with equal signatures.
    std::optional<std::pair<Question, Question>> witness;
};

/// Brute-force feasibility check over all a*b*c secrets.
FeasibilityResult verify_feasible(const Strategy& strategy);

} // namespace mmdim
