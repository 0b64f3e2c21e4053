#include "mmdim/constructors.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mmdim/fixtures.hpp"
#include "mmdim/transforms.hpp"

namespace mmdim {

namespace {

using Seq = std::vector<Color>;

/// o+1, o+2, ..., o+n
Seq seq(int o, int n)
{
    Seq s;
    for (int k = 1; k <= n; ++k)
        s.push_back(o + k);
    return s;
}

/// o+1, o+1, o+2, o+2, ..., o+n, o+n
Seq pairs(int o, int n)
{
    Seq s;
    for (int k = 1; k <= n; ++k) {
        s.push_back(o + k);
        s.push_back(o + k);
    }
    return s;
}

/// o+1, o+2, o+2, ..., o+n, o+n, o+1: the pairs sequence rotated by one.
Seq rotated(int o, int n)
{
    Seq s;
    for (int k = 0; k < 2 * n; ++k)
        s.push_back(o + ((k + 1) / 2) % n + 1);
    return s;
}

Seq cat(std::initializer_list<Seq> parts)
{
    Seq out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

/// One block of questions given column-wise.
struct Block
{
    Seq p1, p2, p3;
};

void append(Strategy& s, const Block& b, std::size_t expected)
{
    if (b.p1.size() != expected || b.p2.size() != expected || b.p3.size() != expected)
        throw std::logic_error("block columns have inconsistent lengths for " + to_string(s.params()));
    for (std::size_t k = 0; k < expected; ++k)
        s.add(Question(b.p1[k], b.p2[k], b.p3[k]));
}

void require_canonical(const Params& p)
{
    if (!p.is_canonical())
        throw std::invalid_argument("params must satisfy a <= b <= c, got " + to_string(p));
}

[[noreturn]] void mismatch(const char* who, const Params& p)
{
    throw std::invalid_argument(std::string(who) + ": params " + to_string(p) + " are outside this case");
}

bool is(const Params& p, int a, int b, int c)
{
    return p == Params(a, b, c);
}

/// x, y, z for the 3a >= b+c blocks.
ConstructionPlan ge_plan(const Params& p)
{
    const int a = p.a(), b = p.b(), c = p.c();
    ConstructionPlan plan;
    plan.c_prime = (a + b + c) % 2 == 0 ? c : c - 1;
    const int s = (a + b + plan.c_prime) / 2;
    plan.x = 2 * a - s;
    plan.y = 2 * b - s;
    plan.z = 2 * plan.c_prime - s;
    plan.b_prime = b;
    plan.a_prime = a;
    return plan;
}

ConstructionPlan eq_plan(const Params& p)
{
    ConstructionPlan plan;
    plan.x = 1;
    plan.y = 2 * (p.b() - p.a()) - 1;
    plan.z = 2 * (p.c() - p.a()) - 1;
    plan.c_prime = p.c();
    plan.b_prime = p.b();
    plan.a_prime = p.a();
    return plan;
}

/// Core (b', c') for the 3a < b+c, 2b > c regime, together with how the
/// core is turned back into a strategy for (b, c).
struct NarrowAdjust
{
    int b = 0;
    int c = 0;
    /// Peg that receives one augmented color afterwards, or -1.
    Peg augment = -1;
};

NarrowAdjust narrow_adjust(int b, int c)
{
    switch ((b + c) % 3) {
    case 2:
        return {b, c, -1};
    case 1:
        return b < c ? NarrowAdjust{b + 1, c, -1} : NarrowAdjust{b, c + 1, -1};
    default:
        return b < c ? NarrowAdjust{b, c - 1, 2} : NarrowAdjust{b - 1, c, 1};
    }
}

ConstructionPlan narrow_plan(int b, int c)
{
    ConstructionPlan plan;
    plan.x = 2 * (2 * b - c - 1) / 3;
    plan.y = 2 * (2 * c - b - 1) / 3;
    plan.z = 0;
    plan.b_prime = b;
    plan.c_prime = c;
    plan.a_prime = (b + c - 2) / 3;
    return plan;
}

/// Lowers the first peg to `a` colors by merging its largest color j into
/// another one, j = a'..a+1. The merge Q1(j-1,j) is used when it meets the
/// projection criterion, otherwise the smallest color i that does. When no
/// color qualifies, Q1(j-1,j) is applied and the end result is checked by
/// brute force.
Strategy reduce_first_peg(Strategy s, int a)
{
    bool unchecked = false;
    for (Color j = s.params().a(); j > a; --j) {
        Color i = j - 1;
        if (!check_projectable(s, 0, i, j)) {
            i = 0;
            for (Color t = 1; t < j && i == 0; ++t) {
                if (check_projectable(s, 0, t, j))
                    i = t;
            }
            if (i == 0) {
                i = j - 1;
                unchecked = true;
            }
        }
        s = project(s, 0, i, j);
    }
    if (unchecked && !verify_feasible(s).feasible)
        throw std::logic_error("projected strategy for " + to_string(s.params()) + " is not feasible");
    return s;
}

} // namespace

const char* to_string(CaseTag tag)
{
    switch (tag) {
    case CaseTag::Trivial: return "Trivial";
    case CaseTag::AA2A: return "AA2A";
    case CaseTag::GE_mod01: return "GE_mod01";
    case CaseTag::GE_mod23: return "GE_mod23";
    case CaseTag::GE_exception445: return "GE_exception445";
    case CaseTag::EQ_general: return "EQ_general";
    case CaseTag::EQ_exception: return "EQ_exception";
    case CaseTag::EQ_466: return "EQ_466";
    case CaseTag::LT_wide: return "LT_wide";
    case CaseTag::LT_narrow: return "LT_narrow";
    case CaseTag::LT_narrow_exception: return "LT_narrow_exception";
    }
    return "?";
}

std::optional<CaseTag> case_tag_from_string(const std::string& s)
{
    for (int t = int(CaseTag::Trivial); t <= int(CaseTag::LT_narrow_exception); ++t) {
        if (s == to_string(CaseTag(t)))
            return CaseTag(t);
    }
    return std::nullopt;
}

CaseTag classify_case(const Params& p)
{
    require_canonical(p);
    const int a = p.a(), b = p.b(), c = p.c();
    if (p.secret_count() == 1)
        return CaseTag::Trivial;
    if (b == a && (c == 2 * a - 1 || c == 2 * a))
        return CaseTag::AA2A;
    if (3 * a == b + c) {
        if (is(p, 4, 6, 6))
            return CaseTag::EQ_466;
        if (is(p, 2, 3, 3) || is(p, 3, 4, 5))
            return CaseTag::EQ_exception;
        return CaseTag::EQ_general;
    }
    if (3 * a > b + c) {
        if (is(p, 4, 4, 4) || is(p, 4, 4, 5))
            return CaseTag::GE_exception445;
        return (a + b + c) % 4 <= 1 ? CaseTag::GE_mod01 : CaseTag::GE_mod23;
    }
    if (2 * b <= c)
        return CaseTag::LT_wide;
    if (is(p, 1, 2, 3) || is(p, 2, 3, 4) || is(p, 2, 4, 4) || is(p, 2, 4, 5))
        return CaseTag::LT_narrow_exception;
    return CaseTag::LT_narrow;
}

ConstructionPlan plan_blocks(const Params& p)
{
    switch (classify_case(p)) {
    case CaseTag::GE_mod01:
    case CaseTag::GE_mod23:
    case CaseTag::GE_exception445:
    case CaseTag::EQ_466:
        return ge_plan(p);
    case CaseTag::EQ_general:
    case CaseTag::EQ_exception:
        return eq_plan(p);
    case CaseTag::LT_narrow:
    case CaseTag::LT_narrow_exception: {
        const auto adj = narrow_adjust(p.b(), p.c());
        return narrow_plan(adj.b, adj.c);
    }
    default:
        throw std::invalid_argument("no block plan for " + to_string(p) + " (case " +
                                    to_string(classify_case(p)) + ")");
    }
}

Strategy construct_ge_mod01(const Params& p)
{
    require_canonical(p);
    if (3 * p.a() < p.b() + p.c() || (p.a() + p.b() + p.c()) % 4 > 1)
        mismatch("construct_ge_mod01", p);
    if (is(p, 4, 4, 4) || is(p, 4, 4, 5))
        return tables::exception_44c(p.c());
    const auto plan = ge_plan(p);
    const int x = plan.x, y = plan.y, z = plan.z;
    if (x < 0 || y < 0 || z < 0 || x % 2 || y % 2 || z % 2)
        mismatch("construct_ge_mod01", p);

    Strategy s(p);
    append(s, {seq(0, x), pairs(0, x / 2), rotated(0, x / 2)}, std::size_t(x));
    append(s, {pairs(x, y / 2), seq(x / 2, y), rotated(x / 2, y / 2)}, std::size_t(y));
    append(s, {pairs(x + y / 2, z / 2), rotated(x / 2 + y, z / 2), seq(x / 2 + y / 2, z)}, std::size_t(z));
    return s;
}

Strategy construct_ge_mod23(const Params& p)
{
    require_canonical(p);
    if (3 * p.a() < p.b() + p.c() || (p.a() + p.b() + p.c()) % 4 < 2)
        mismatch("construct_ge_mod23", p);
    const auto plan = ge_plan(p);
    const int x = plan.x, y = plan.y, z = plan.z;
    if (x < 1 || y < 1 || z < 1 || x % 2 == 0 || y % 2 == 0 || z % 2 == 0)
        mismatch("construct_ge_mod23", p);

    const int hx = (x - 1) / 2, hy = (y - 1) / 2;
    Strategy s(p);
    append(s, {seq(0, x - 1), pairs(0, hx), rotated(0, hx)}, std::size_t(x - 1));
    append(s, {pairs(x - 1, hy), seq(hx, y - 1), rotated(hx, hy)}, std::size_t(y - 1));

    const int o1 = x - 1 + hy;
    const int o2 = hx + y - 1;
    const int o3 = hx + hy;
    append(s,
           {cat({{o1 + 1}, pairs(o1 + 1, (z + 1) / 2)}),
            cat({{o2 + 1, o2 + 2}, pairs(o2 + 2, (z - 1) / 2), {o2 + 1}}),
            cat({{o3 + 1, o3 + 1}, seq(o3 + 1, z)})},
           std::size_t(z + 2));
    return s;
}

Strategy construct_aa2a(const Params& p)
{
    require_canonical(p);
    const int a = p.a();
    if (p.b() != a || (p.c() != 2 * a - 1 && p.c() != 2 * a))
        mismatch("construct_aa2a", p);
    Strategy s(p);
    append(s, {cat({pairs(0, a - 1), {a}}), cat({{1}, pairs(1, a - 1)}), seq(0, 2 * a - 1)},
           std::size_t(2 * a - 1));
    return s;
}

Strategy construct_equal(const Params& p)
{
    require_canonical(p);
    const int a = p.a(), b = p.b(), c = p.c();
    if (3 * a != b + c || b == a)
        mismatch("construct_equal", p);
    if (is(p, 4, 6, 6))
        return construct_ge_mod01(p);
    if (is(p, 2, 3, 3))
        return tables::exception_233();
    if (is(p, 3, 4, 5))
        return tables::exception_345();

    const auto plan = eq_plan(p);
    const int y = plan.y, z = plan.z;
    const int hz = (z - 1) / 2;
    Strategy s(p);
    append(s, {pairs(0, hz), rotated(0, hz), seq(0, z - 1)}, std::size_t(z - 1));
    append(s,
           {cat({pairs(hz, a - 1 - hz), {a}}),
            cat({seq(hz, b - 1 - hz), {(z + 1) / 2}}),
            cat({{z}, pairs(z, c - 1 - z)})},
           std::size_t(y + 2));
    return s;
}

Strategy construct_lt_wide(const Params& p)
{
    require_canonical(p);
    const int a = p.a(), b = p.b(), c = p.c();
    if (3 * a >= b + c || 2 * b > c)
        mismatch("construct_lt_wide", p);

    // With b = a+1 the staircase confuses e.g. (1,3,3) and (2,1,2) on
    // (2,3,6). There the (b,b,c) staircase is built and color b is merged
    // into color 1 on the first peg.
    const int width = (b == a + 1 && a >= 2) ? b : a;
    Strategy s(Params(width, b, c));
    for (int k = 0; k <= c - 2; ++k)
        s.add(Question(std::min(k / 2 + 1, width), std::min((k + 1) / 2 + 1, b), k + 1));
    if (width == a)
        return s;
    if (!check_projectable(s, 0, 1, b))
        throw std::logic_error("projection Q1(1," + std::to_string(b) + ") is not admissible for " +
                               to_string(s.params()));
    return project(s, 0, 1, b);
}

Strategy construct_narrow_core(const Params& p)
{
    require_canonical(p);
    const int a = p.a(), b = p.b(), c = p.c();
    if ((b + c) % 3 != 2 || 3 * a != b + c - 2 || 2 * b <= c)
        mismatch("construct_narrow_core", p);
    if (is(p, 1, 2, 3))
        return tables::exception_123();
    if (is(p, 2, 4, 4))
        return tables::exception_244();
    const auto plan = narrow_plan(b, c);
    const int x = plan.x, y = plan.y;
    Strategy s(p);
    append(s, {pairs(0, a), cat({seq(0, x), rotated(x, y / 2)}), cat({rotated(0, x / 2), seq(x / 2, y)})},
           std::size_t(x + y));
    return s;
}

Strategy construct_lt_narrow(const Params& p)
{
    require_canonical(p);
    const int a = p.a(), b = p.b(), c = p.c();
    if (3 * a >= b + c || 2 * b <= c)
        mismatch("construct_lt_narrow", p);
    if (is(p, 1, 2, 3))
        return tables::exception_123();
    if (is(p, 2, 3, 4))
        return tables::exception_234();
    if (is(p, 2, 4, 4))
        return tables::exception_244();
    if (is(p, 2, 4, 5))
        return tables::exception_245();

    const auto adj = narrow_adjust(b, c);
    const int a_core = (adj.b + adj.c - 2) / 3;
    Strategy core = construct_narrow_core(Params(a_core, adj.b, adj.c));

    // The core leaves one color unused on pegs 2 and 3, so it is also a
    // strategy for one color fewer on either of them.
    Params target(a_core, b, c);
    if (adj.augment >= 0) {
        target = target.with_colors(adj.augment, target.colors(adj.augment) - 1);
        core = augment_peg(Strategy(target, core.questions()), adj.augment, core.size() - 1);
    } else {
        core = Strategy(target, core.questions());
    }

    return reduce_first_peg(core, a);
}

Strategy construct(const Params& params)
{
    const auto canon = canonicalize(params);
    const Params& p = canon.params;
    Strategy s(p);
    switch (classify_case(p)) {
    case CaseTag::Trivial: break;
    case CaseTag::AA2A: s = construct_aa2a(p); break;
    case CaseTag::GE_mod01:
    case CaseTag::GE_exception445:
        s = (p.a() + p.b() + p.c()) % 4 <= 1 ? construct_ge_mod01(p) : construct_ge_mod23(p);
        break;
    case CaseTag::GE_mod23: s = construct_ge_mod23(p); break;
    case CaseTag::EQ_general:
    case CaseTag::EQ_exception:
    case CaseTag::EQ_466: s = construct_equal(p); break;
    case CaseTag::LT_wide: s = construct_lt_wide(p); break;
    case CaseTag::LT_narrow:
    case CaseTag::LT_narrow_exception: s = construct_lt_narrow(p); break;
    }
    return unpermute(s, canon);
}

} // namespace mmdim
