#include "mmdim/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace mmdim {

const char* to_string(Provenance p)
{
    switch (p) {
    case Provenance::Trivial: return "trivial";
    case Provenance::HalfSumMinusOne: return "half_sum_minus_one";
    case Provenance::LargestMinusOne: return "largest_minus_one";
    case Provenance::TwoThirds: return "two_thirds";
    case Provenance::HalfSum: return "half_sum";
    case Provenance::Exception466: return "exception_466";
    case Provenance::EqualSum: return "equal_sum";
    case Provenance::AllEqual: return "all_equal";
    case Provenance::AA2A: return "aa2a";
    case Provenance::ComputerVerified: return "computer_verified";
    }
    return "?";
}

Bound lower_bound(const Params& params)
{
    const Params p = canonicalize(params).params;
    const int a = p.a(), b = p.b(), c = p.c();
    if (p == Params(4, 6, 6))
        return {8, Provenance::Exception466};
    if (p.secret_count() == 1)
        return {0, Provenance::Trivial};

    Bound best{(a + b + c) / 2 - 1, Provenance::HalfSumMinusOne};
    if (c - 1 > best.value)
        best = {c - 1, Provenance::LargestMinusOne};
    if (2 * b > c && 2 * (b + c - 1) / 3 > best.value)
        best = {2 * (b + c - 1) / 3, Provenance::TwoThirds};
    return best;
}

Bound upper_bound(const Params& params)
{
    const Params p = canonicalize(params).params;
    const int a = p.a(), b = p.b(), c = p.c();
    switch (classify_case(p)) {
    case CaseTag::Trivial: return {0, Provenance::Trivial};
    case CaseTag::EQ_466: return {8, Provenance::Exception466};
    case CaseTag::AA2A: return {2 * a - 1, Provenance::AA2A};
    case CaseTag::EQ_general:
    case CaseTag::EQ_exception: return {(a + b + c) / 2 - 1, Provenance::EqualSum};
    case CaseTag::LT_wide: return {c - 1, Provenance::LargestMinusOne};
    case CaseTag::LT_narrow:
    case CaseTag::LT_narrow_exception: return {2 * (b + c - 1) / 3, Provenance::TwoThirds};
    default: return {(a + b + c) / 2, Provenance::HalfSum};
    }
}

const std::vector<Params>& computer_verified_triples()
{
    static const std::vector<Params> triples{
        {3, 3, 4}, {3, 4, 4}, {4, 4, 5}, {4, 4, 6}, {4, 5, 5}, {4, 5, 6},
        {5, 5, 6}, {5, 6, 6}, {5, 5, 7}, {5, 5, 8}, {5, 6, 7}, {5, 6, 8},
        {5, 7, 7}, {6, 6, 7}, {6, 6, 8}, {6, 7, 7}, {6, 6, 9}, {6, 7, 8},
    };
    return triples;
}

DimensionResult dimension(const Params& params, bool with_witness)
{
    const Params p = canonicalize(params).params;
    const CaseTag tag = classify_case(p);
    DimensionResult r{params, tag, lower_bound(p), upper_bound(p), std::nullopt, std::nullopt};

    const int a = p.a(), b = p.b(), c = p.c();
    switch (tag) {
    case CaseTag::GE_mod01:
    case CaseTag::GE_mod23:
    case CaseTag::GE_exception445: {
        // Open regime: only the special families and the verified list are known.
        const auto& verified = computer_verified_triples();
        if (a == b && b == c)
            r.exact = Bound{3 * a / 2, Provenance::AllEqual};
        else if (std::find(verified.begin(), verified.end(), p) != verified.end())
            r.exact = Bound{r.upper.value, Provenance::ComputerVerified};
        else if (r.lower.value == r.upper.value)
            r.exact = r.upper;
        break;
    }
    default:
        r.exact = r.upper;
        break;
    }
    if (with_witness)
        r.witness = construct(params);
    return r;
}

std::vector<DimensionResult> dimension_table(int max_sum)
{
    std::vector<DimensionResult> rows;
    for (int s = 3; s <= max_sum; ++s) {
        for (int a = 1; 3 * a <= s; ++a) {
            for (int b = a; a + 2 * b <= s; ++b) {
                const int c = s - a - b;
                rows.push_back(dimension(Params(a, b, c)));
            }
        }
    }
    return rows;
}

std::string dimension_table_csv(const std::vector<DimensionResult>& rows)
{
    std::ostringstream os;
    os << "a,b,c,case,lower,upper,exact,provenance\n";
    for (const auto& r : rows) {
        const Params& p = r.params;
        os << p.a() << ',' << p.b() << ',' << p.c() << ',' << to_string(r.tag) << ',' << r.lower.value << ','
           << r.upper.value << ',';
        if (r.exact)
            os << r.exact->value << ',' << to_string(r.exact->provenance);
        else
            os << ",open";
        os << '\n';
    }
    return os.str();
}

} // namespace mmdim
