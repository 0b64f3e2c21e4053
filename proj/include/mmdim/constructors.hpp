// constructors.hpp -- explicit feasible strategies for every (a,b,c)

#pragma once

#include <optional>
#include <string>

#include "mmdim/core.hpp"

namespace mmdim {

/// Parameter regimes, a total function of the sorted triple a <= b <= c.
enum class CaseTag {
    Trivial,             ///< a*b*c == 1
    AA2A,                ///< b == a, c in {2a-1, 2a}
    GE_mod01,            ///< 3a > b+c, a+b+c = 0,1 (mod 4)
    GE_mod23,            ///< 3a > b+c, a+b+c = 2,3 (mod 4)
    GE_exception445,     ///< (4,4,4) and (4,4,5)
    EQ_general,          ///< 3a == b+c, b > a, c >= a+3
    EQ_exception,        ///< (2,3,3) and (3,4,5)
    EQ_466,              ///< (4,6,6)
    LT_wide,             ///< 3a < b+c, 2b <= c
    LT_narrow,           ///< 3a < b+c, 2b > c
    LT_narrow_exception, ///< (1,2,3), (2,3,4), (2,4,4), (2,4,5)
};

const char* to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(const std::string& s);

/// Throws std::invalid_argument unless params are sorted ascending.
CaseTag classify_case(const Params& params);

/// Block arithmetic behind the A/B/C-type constructions: x, y and z count
/// the questions of type A, B and C.
struct ConstructionPlan
{
    int x = 0;
    int y = 0;
    int z = 0;
    int c_prime = 0; ///< third-peg count the blocks are laid out for
    /// Second-peg count of the core strategy (differs from b only for the
    /// 3a < b+c, 2b > c regime, which builds on an adjusted triple).
    int b_prime = 0;
    int a_prime = 0; ///< first-peg count of that core strategy

    int size() const { return x + y + z; }
};

/// Defined for the GE_*, EQ_general, EQ_466 and LT_narrow* regimes; throws
/// std::invalid_argument for the others.
ConstructionPlan plan_blocks(const Params& params);

/// Feasible strategy of size upper_bound(params). Params in any peg order:
/// the triple is sorted, built, and the output mapped back to the caller's
/// peg order.
Strategy construct(const Params& params);

// The per-regime builders below take sorted params and throw
// std::invalid_argument when the params are outside their regime.

/// Three cycles of A, B and C questions; the (4,4,c) table for c in {4,5}.
Strategy construct_ge_mod01(const Params& params);
/// Two pure cycles plus a third block A, B, C^z.
Strategy construct_ge_mod23(const Params& params);
/// One path D C^(2a-3) E with 2a-1 questions.
Strategy construct_aa2a(const Params& params);
/// 3a == b+c: two cycles C^(z-1) and C B^y A; fixed tables for (2,3,3),
/// (3,4,5); (4,6,6) uses construct_ge_mod01.
Strategy construct_equal(const Params& params);
/// 3a < b+c, 2b <= c: c-1 questions.
Strategy construct_lt_wide(const Params& params);
/// 3a < b+c, 2b > c: floor(2(b+c-1)/3) questions.
Strategy construct_lt_narrow(const Params& params);

/// The B/C two-cycle core for b+c = 2 (mod 3), a = (b+c-2)/3, including the
/// fixed tables for (1,2,3) and (2,4,4).
Strategy construct_narrow_core(const Params& params);

} // namespace mmdim
