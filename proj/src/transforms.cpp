#include "mmdim/transforms.hpp"

#include <stdexcept>
#include <string>

namespace mmdim {

namespace {

void check_peg(Peg peg)
{
    if (peg < 0 || peg >= kPegs)
        throw std::out_of_range("peg index must be in [0,3), got " + std::to_string(peg));
}

void check_pair(const Strategy& s, Peg peg, Color i, Color j)
{
    check_peg(peg);
    if (i == j)
        throw std::invalid_argument("projection colors must differ");
    const int n = s.params().colors(peg);
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("projection colors out of range for peg " + std::to_string(peg + 1));
}

} // namespace

Strategy augment_peg(const Strategy& strategy, Peg peg, std::size_t source)
{
    check_peg(peg);
    if (strategy.empty())
        throw std::invalid_argument("cannot augment an empty strategy");
    if (source >= strategy.size())
        throw std::out_of_range("source question index out of range");

    const Color fresh = strategy.params().colors(peg) + 1;
    Strategy out(strategy.params().with_colors(peg, fresh));
    for (const auto& q : strategy)
        out.add(q);
    Question copy = strategy[source];
    copy[peg] = fresh;
    out.add(copy);
    return out;
}

bool check_projectable(const Strategy& strategy, Peg peg, Color i, Color j)
{
    check_pair(strategy, peg, i, j);
    const Peg p1 = peg == 0 ? 1 : 0;
    const Peg p2 = peg == 2 ? 1 : 2;
    const auto& params = strategy.params();
    for (Color y = 1; y <= params.colors(p1); ++y) {
        for (Color z = 1; z <= params.colors(p2); ++z) {
            bool covered = false;
            for (const auto& q : strategy) {
                if ((q[peg] == i || q[peg] == j) && q[p1] != y && q[p2] != z) {
                    covered = true;
                    break;
                }
            }
            if (!covered)
                return false;
        }
    }
    return true;
}

Projection project_detailed(const Strategy& strategy, Peg peg, Color i, Color j)
{
    check_pair(strategy, peg, i, j);
    const int n = strategy.params().colors(peg);
    Projection result{Strategy(strategy.params().with_colors(peg, n - 1))};
    for (Question q : strategy) {
        if (q[peg] == j)
            q[peg] = i;
        if (q[peg] > j)
            --q[peg];
        if (result.strategy.contains(q))
            ++result.merged_duplicates;
        else
            result.strategy.add(q);
    }
    return result;
}

Strategy project(const Strategy& strategy, Peg peg, Color i, Color j)
{
    return project_detailed(strategy, peg, i, j).strategy;
}

} // namespace mmdim
