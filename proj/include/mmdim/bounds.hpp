// bounds.hpp -- closed-form bounds and known exact values of f(a,b,c)

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmdim/constructors.hpp"
#include "mmdim/core.hpp"

namespace mmdim {

/// Where a bound or exact value comes from. Serialized by to_string().
enum class Provenance {
    Trivial,          ///< a single secret needs no question
    HalfSumMinusOne,  ///< floor((a+b+c)/2) - 1
    LargestMinusOne,  ///< c - 1
    TwoThirds,        ///< floor(2(b+c-1)/3), only when 2b > c
    HalfSum,          ///< floor((a+b+c)/2), from the 3a > b+c construction
    Exception466,     ///< f(4,6,6) = 8
    EqualSum,         ///< 3a = b+c: floor((a+b+c)/2) - 1
    AllEqual,         ///< f(a,a,a) = floor(3a/2)
    AA2A,             ///< f(a,a,2a-1) = f(a,a,2a) = 2a-1
    ComputerVerified, ///< exhaustive search confirmed the upper bound
};

const char* to_string(Provenance p);

struct Bound
{
    int value = 0;
    Provenance provenance = Provenance::Trivial;
};

/// Largest of the applicable lower bounds. Params in any peg order.
Bound lower_bound(const Params& params);

/// Size of construct(params). Params in any peg order.
Bound upper_bound(const Params& params);

/// The triples with 3a > b+c whose value was settled by computer search,
/// ascending.
const std::vector<Params>& computer_verified_triples();

struct DimensionResult
{
    Params params;      ///< as given
    CaseTag tag;        ///< case of the sorted triple
    Bound lower;
    Bound upper;
    std::optional<Bound> exact;
    std::optional<Strategy> witness; ///< in the caller's peg order
};

DimensionResult dimension(const Params& params, bool with_witness = false);

/// One row per sorted triple with a+b+c <= max_sum, ascending by
/// (a+b+c, a, b, c).
std::vector<DimensionResult> dimension_table(int max_sum);

std::string dimension_table_csv(const std::vector<DimensionResult>& rows);

} // namespace mmdim
