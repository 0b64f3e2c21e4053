#include "mmdim/fixtures.hpp"

#include <stdexcept>

namespace mmdim {

namespace tables {

Strategy exception_44c(int c)
{
    if (c != 4 && c != 5)
        throw std::invalid_argument("the (4,4,c) table covers c in {4,5}");
    return Strategy(Params(4, 4, c), {{1, 1, 1}, {1, 1, 2}, {1, 2, 3}, {2, 3, 3}, {3, 4, 4}, {4, 4, 4}});
}

Strategy exception_233()
{
    return Strategy(Params(2, 3, 3), {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}});
}

Strategy exception_345()
{
    return Strategy(Params(3, 4, 5), {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {2, 3, 4}, {3, 1, 4}});
}

Strategy exception_123()
{
    return Strategy(Params(1, 2, 3), {{1, 1, 1}, {1, 1, 2}});
}

Strategy exception_244()
{
    return Strategy(Params(2, 4, 4), {{1, 1, 1}, {1, 2, 1}, {1, 3, 2}, {2, 3, 3}});
}

Strategy exception_234()
{
    return Strategy(Params(2, 3, 4), {{1, 1, 1}, {1, 2, 1}, {1, 3, 2}, {2, 3, 3}});
}

Strategy exception_245()
{
    return Strategy(Params(2, 4, 5), {{1, 1, 1}, {1, 2, 1}, {1, 3, 2}, {2, 3, 3}, {2, 3, 5}});
}

} // namespace tables

namespace {

std::vector<Fixture> build()
{
    std::vector<Fixture> f;
    auto add = [&](std::string name, Params p, std::vector<Question> qs, bool feasible = true) {
        f.push_back({std::move(name), Strategy(p, std::move(qs)), feasible});
    };

    // Color merge counterexample: a feasible (3,3,3) strategy and its
    // projection Q1(2,3), which confuses (2,1,2) and (1,3,3).
    add("projection-333", Params(3, 3, 3), {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {3, 3, 1}});
    add("projection-233", Params(2, 3, 3), {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {2, 3, 1}}, false);

    // 3a >= b+c, a+b+c = 0,1 (mod 4)
    f.push_back({"ge-444", tables::exception_44c(4), true});
    f.push_back({"ge-445", tables::exception_44c(5), true});
    add("ge-466", Params(4, 6, 6),
        {{1, 1, 1}, {1, 2, 2}, {2, 3, 2}, {2, 4, 1}, {3, 5, 3}, {3, 6, 4}, {4, 6, 5}, {4, 5, 6}});
    const std::vector<Question> ge78c{{1, 1, 1}, {2, 1, 1}, {3, 2, 2}, {3, 3, 3}, {4, 4, 3}, {4, 5, 2},
                                      {5, 6, 4}, {5, 7, 5}, {6, 7, 6}, {6, 8, 7}, {7, 8, 8}, {7, 6, 9}};
    add("ge-789", Params(7, 8, 9), ge78c);
    add("ge-7810", Params(7, 8, 10), ge78c);

    // 3a >= b+c, a+b+c = 2,3 (mod 4)
    const std::vector<Question> ge33c{{1, 1, 1}, {2, 2, 1}, {2, 3, 2}, {3, 3, 3}, {3, 1, 4}};
    add("ge-334", Params(3, 3, 4), ge33c);
    add("ge-335", Params(3, 3, 5), ge33c);
    const std::vector<Question> ge89c{{1, 1, 1}, {2, 1, 1}, {3, 2, 2}, {3, 3, 3}, {4, 4, 3},
                                      {4, 5, 2}, {5, 6, 4}, {6, 7, 4}, {6, 8, 5}, {7, 8, 6},
                                      {7, 9, 7}, {8, 9, 8}, {8, 6, 9}};
    add("ge-899", Params(8, 9, 9), ge89c);
    add("ge-8910", Params(8, 9, 10), ge89c);

    // (a,a,2a-1) and (a,a,2a)
    const std::vector<Question> aa{{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {2, 3, 4}, {3, 3, 5},
                                   {3, 4, 6}, {4, 4, 7}, {4, 5, 8}, {5, 5, 9}};
    add("aa2a-559", Params(5, 5, 9), aa);
    add("aa2a-5510", Params(5, 5, 10), aa);

    // 3a < b+c, 2b <= c
    add("lt-wide-3511", Params(3, 5, 11),
        {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {2, 3, 4}, {3, 3, 5},
         {3, 4, 6}, {3, 4, 7}, {3, 5, 8}, {3, 5, 9}, {3, 5, 10}});

    // 3a == b+c
    f.push_back({"eq-233", tables::exception_233(), true});
    add("eq-457", Params(4, 5, 7), {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {2, 1, 4}, {3, 3, 5}, {3, 4, 6}, {4, 3, 6}});
    add("eq-699", Params(6, 9, 9),
        {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {2, 1, 4}, {3, 3, 5}, {3, 4, 6},
         {4, 5, 6}, {4, 6, 7}, {5, 7, 7}, {5, 8, 8}, {6, 3, 8}});
    f.push_back({"eq-345", tables::exception_345(), true});

    // 3a < b+c, 2b > c
    add("lt-narrow-589", Params(5, 8, 9),
        {{1, 1, 1}, {1, 2, 2}, {2, 3, 2}, {2, 4, 1}, {3, 5, 3}, {3, 6, 4}, {4, 6, 5}, {4, 7, 6}, {5, 7, 7}, {5, 5, 8}});
    f.push_back({"lt-narrow-123", tables::exception_123(), true});
    f.push_back({"lt-narrow-244", tables::exception_244(), true});
    add("lt-narrow-4810", Params(4, 8, 10),
        {{1, 1, 1}, {1, 2, 2}, {2, 3, 2}, {2, 4, 1}, {3, 5, 3}, {3, 6, 4},
         {4, 6, 5}, {4, 7, 6}, {4, 7, 7}, {4, 5, 8}, {4, 5, 10}});
    return f;
}

} // namespace

const std::vector<Fixture>& fixtures()
{
    static const std::vector<Fixture> all = build();
    return all;
}

const Fixture& fixture(const std::string& name)
{
    for (const auto& f : fixtures()) {
        if (f.name == name)
            return f;
    }
    throw std::out_of_range("unknown fixture '" + name + "'");
}

} // namespace mmdim
