#include "mmdim/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "mmdim/bounds.hpp"
#include "mmdim/constructors.hpp"

namespace mmdim {

namespace {

using Clock = std::chrono::steady_clock;
using Triple = std::array<int, kPegs>;

constexpr int kLabelBits = 10;

std::uint32_t pack(int l1, int l2, int l3)
{
    return (std::uint32_t(l1) << (2 * kLabelBits)) | (std::uint32_t(l2) << kLabelBits) | std::uint32_t(l3);
}

/// Least relabeled encoding of a fixed list of triples over all question
/// orders, built greedily and branching only on ties.
class KeyBuilder
{
public:
    KeyBuilder(std::vector<Triple> qs, const Triple& counts) : qs_(std::move(qs)), used_(qs_.size(), false)
    {
        for (int p = 0; p < kPegs; ++p)
            label_[p].assign(std::size_t(counts[p]) + 1, 0);
        cur_.reserve(qs_.size());
    }

    std::vector<std::uint32_t> run()
    {
        rec(0);
        return best_;
    }

private:
    std::uint32_t code_of(const Triple& q) const
    {
        int l[kPegs];
        for (int p = 0; p < kPegs; ++p) {
            const int have = label_[p][std::size_t(q[p])];
            l[p] = have ? have : next_[p];
        }
        return pack(l[0], l[1], l[2]);
    }

    void rec(std::size_t depth)
    {
        if (depth == qs_.size()) {
            if (!have_best_ || cur_ < best_) {
                best_ = cur_;
                have_best_ = true;
            }
            return;
        }
        std::uint32_t least = std::numeric_limits<std::uint32_t>::max();
        for (std::size_t i = 0; i < qs_.size(); ++i) {
            if (!used_[i])
                least = std::min(least, code_of(qs_[i]));
        }
        if (have_best_) {
            // Stop when this prefix can no longer beat the best encoding.
            const auto cmp = std::lexicographical_compare_three_way(cur_.begin(), cur_.end(), best_.begin(),
                                                                    best_.begin() + std::ptrdiff_t(depth));
            if (cmp == std::strong_ordering::equal && least > best_[depth])
                return;
        }
        for (std::size_t i = 0; i < qs_.size(); ++i) {
            if (used_[i] || code_of(qs_[i]) != least)
                continue;
            bool fresh[kPegs];
            for (int p = 0; p < kPegs; ++p) {
                int& l = label_[p][std::size_t(qs_[i][p])];
                fresh[p] = l == 0;
                if (fresh[p])
                    l = next_[p]++;
            }
            used_[i] = true;
            cur_.push_back(least);
            rec(depth + 1);
            cur_.pop_back();
            used_[i] = false;
            for (int p = 0; p < kPegs; ++p) {
                if (fresh[p]) {
                    label_[p][std::size_t(qs_[i][p])] = 0;
                    --next_[p];
                }
            }
        }
    }

    std::vector<Triple> qs_;
    std::vector<bool> used_;
    std::array<std::vector<int>, kPegs> label_;
    std::array<int, kPegs> next_{1, 1, 1};
    std::vector<std::uint32_t> cur_;
    std::vector<std::uint32_t> best_;
    bool have_best_ = false;
};

constexpr std::array<PegOrder, 6> kAllOrders{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

CanonicalKey key_of(const std::vector<Triple>& qs, const Params& params)
{
    Triple sorted = params.counts();
    std::sort(sorted.begin(), sorted.end());
    CanonicalKey key{sorted, {}};
    bool first = true;
    for (const auto& order : kAllOrders) {
        Triple counts;
        bool ok = true;
        for (int i = 0; i < kPegs; ++i) {
            counts[i] = params.colors(order[i]);
            ok = ok && counts[i] == sorted[i];
        }
        if (!ok)
            continue;
        std::vector<Triple> permuted;
        permuted.reserve(qs.size());
        for (const auto& q : qs)
            permuted.push_back({q[order[0]], q[order[1]], q[order[2]]});
        auto code = KeyBuilder(std::move(permuted), counts).run();
        if (first || code < key.code) {
            key.code = std::move(code);
            first = false;
        }
    }
    return key;
}

struct KeyHash
{
    std::size_t operator()(const CanonicalKey& k) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto v : k.code)
            h = (h ^ v) * 1099511628211ull;
        return h;
    }
};

struct KeyEq
{
    bool operator()(const CanonicalKey& l, const CanonicalKey& r) const noexcept { return l.code == r.code; }
};

using KeySet = std::unordered_set<CanonicalKey, KeyHash, KeyEq>;

int questions_needed(int m)
{
    int t = 0;
    for (long long cap = 1; cap < m; cap *= 4)
        ++t;
    return t;
}

/// Shared, read-only description of one exists_feasible call plus the
/// cross-thread stop signals.
struct Problem
{
    Params params;
    int k;
    int n_secrets;
    std::vector<Triple> questions; // all questions in secret_index order
    std::vector<std::vector<std::uint8_t>> matches; // matches[q][s]
    SearchBudget budget;
    Clock::time_point deadline;
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<int> winner{std::numeric_limits<int>::max()};

    explicit Problem(const Params& p, int k_, const SearchBudget& b)
        : params(p), k(k_), n_secrets(int(p.secret_count())), budget(b),
          deadline(Clock::now() + b.time_limit)
    {
        for (int s = 0; s < n_secrets; ++s) {
            const Question q = secret_at(p, s);
            questions.push_back(q.pegs);
        }
        matches.assign(std::size_t(n_secrets), std::vector<std::uint8_t>(std::size_t(n_secrets)));
        for (int q = 0; q < n_secrets; ++q) {
            for (int s = 0; s < n_secrets; ++s)
                matches[q][s] = std::uint8_t(match_count(Question(questions[q]), Question(questions[s])));
        }
    }
};

/// Partial strategy with its collision partition.
struct Node
{
    std::vector<int> chosen;
    std::vector<std::uint16_t> cls;
    int n_classes = 1;
    int largest = 0;
    std::array<std::vector<int>, kPegs> usage;
};

Node root_node(const Problem& pr)
{
    Node n;
    n.cls.assign(std::size_t(pr.n_secrets), 0);
    n.largest = pr.n_secrets;
    for (int p = 0; p < kPegs; ++p)
        n.usage[p].assign(std::size_t(pr.params.colors(p)) + 1, 0);
    return n;
}

void extend(const Problem& pr, const Node& from, int q, Node& to, std::vector<int>& remap,
            std::vector<int>& sizes)
{
    to.chosen = from.chosen;
    to.chosen.push_back(q);
    to.usage = from.usage;
    for (int p = 0; p < kPegs; ++p)
        ++to.usage[p][std::size_t(pr.questions[q][p])];

    remap.assign(std::size_t(from.n_classes) * 4, -1);
    sizes.clear();
    to.cls.resize(from.cls.size());
    const auto& m = pr.matches[q];
    int next = 0;
    for (std::size_t s = 0; s < from.cls.size(); ++s) {
        int& slot = remap[std::size_t(from.cls[s]) * 4 + m[s]];
        if (slot < 0) {
            slot = next++;
            sizes.push_back(0);
        }
        to.cls[s] = std::uint16_t(slot);
        ++sizes[std::size_t(slot)];
    }
    to.n_classes = next;
    to.largest = *std::max_element(sizes.begin(), sizes.end());
}

bool pruned(const Problem& pr, const Node& n)
{
    const int remaining = pr.k - int(n.chosen.size());
    if (questions_needed(n.largest) > remaining)
        return true;
    for (int p = 0; p < kPegs; ++p) {
        int unused = 0;
        for (int c = 1; c <= pr.params.colors(p); ++c)
            unused += n.usage[p][std::size_t(c)] == 0;
        if (unused - remaining >= 2)
            return true;
    }
    return false;
}

std::vector<Triple> triples_of(const Problem& pr, const std::vector<int>& chosen)
{
    std::vector<Triple> t;
    t.reserve(chosen.size());
    for (int q : chosen)
        t.push_back(pr.questions[q]);
    return t;
}

/// Pads a feasible prefix with unused questions, smallest index first.
std::vector<int> pad(const Problem& pr, std::vector<int> chosen)
{
    for (int q = 0; int(chosen.size()) < pr.k && q < pr.n_secrets; ++q) {
        if (std::find(chosen.begin(), chosen.end(), q) == chosen.end())
            chosen.push_back(q);
    }
    return chosen;
}

enum class BranchResult { Found, Exhausted, Stopped };

class Branch
{
public:
    Branch(Problem& pr, int index) : pr_(pr), index_(index), seen_(std::size_t(pr.k) + 1) {}

    BranchResult run(const Node& start)
    {
        try {
            return dfs(start) ? BranchResult::Found : BranchResult::Exhausted;
        } catch (const Stop&) {
            return BranchResult::Stopped;
        }
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    struct Stop
    {
    };

    void tick()
    {
        ++nodes_;
        const auto total = pr_.total_nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (total > pr_.budget.node_limit)
            pr_.out_of_budget = true;
        if ((nodes_ & 1023) == 0 && Clock::now() > pr_.deadline)
            pr_.out_of_budget = true;
        if (pr_.out_of_budget.load(std::memory_order_relaxed) ||
            pr_.winner.load(std::memory_order_relaxed) < index_)
            throw Stop{};
    }

    bool dfs(const Node& node)
    {
        tick();
        if (node.n_classes == pr_.n_secrets) {
            witness_ = pad(pr_, node.chosen);
            return true;
        }
        const int depth = int(node.chosen.size());
        if (depth >= pr_.k)
            return false;
        const bool leaf_level = depth + 1 == pr_.k;
        auto& seen = seen_[std::size_t(depth) + 1];
        Node child;
        for (int q = 0; q < pr_.n_secrets; ++q) {
            if (std::find(node.chosen.begin(), node.chosen.end(), q) != node.chosen.end())
                continue;
            extend(pr_, node, q, child, remap_, sizes_);
            if (leaf_level) {
                if (child.n_classes == pr_.n_secrets) {
                    tick();
                    witness_ = child.chosen;
                    return true;
                }
                continue;
            }
            if (pruned(pr_, child))
                continue;
            auto key = key_of(triples_of(pr_, child.chosen), pr_.params);
            if (seen.count(key))
                continue;
            if (seen.size() < pr_.budget.dedup_limit)
                seen.insert(std::move(key));
            if (dfs(child))
                return true;
        }
        return false;
    }

    Problem& pr_;
    int index_;
    std::uint64_t nodes_ = 0;
    std::vector<KeySet> seen_;
    std::vector<int> witness_;
    std::vector<int> remap_;
    std::vector<int> sizes_;
};

Strategy to_strategy(const Problem& pr, const std::vector<int>& chosen)
{
    Strategy s(pr.params);
    for (int q : chosen)
        s.add(Question(pr.questions[q]));
    return s;
}

std::chrono::milliseconds since(Clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

} // namespace

const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::FoundWitness: return "found";
    case SearchStatus::ExhaustedNone: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

CanonicalKey canonical_key(const Strategy& strategy)
{
    std::vector<Triple> qs;
    for (const auto& q : strategy)
        qs.push_back(q.pegs);
    return key_of(qs, strategy.params());
}

SearchOutcome exists_feasible(const Params& params, int k, const SearchBudget& budget)
{
    if (k < 0)
        throw std::invalid_argument("search size must be non-negative");
    const auto t0 = Clock::now();
    const auto canon = canonicalize(params);
    SearchOutcome out;
    out.size = k;

    if (params.secret_count() == 1) {
        // Any k distinct questions work; there is only one question.
        out.status = k <= 1 ? SearchStatus::FoundWitness : SearchStatus::ExhaustedNone;
        if (k <= 1) {
            Strategy s(params);
            if (k == 1)
                s.add(Question(1, 1, 1));
            out.witness = s;
        }
        return out;
    }
    if (k == 0 || k > params.secret_count()) {
        out.status = SearchStatus::ExhaustedNone;
        return out;
    }

    Problem pr(canon.params, k, budget);
    auto finish = [&](SearchStatus st, const std::vector<int>* chosen) {
        out.status = st;
        if (chosen)
            out.witness = unpermute(to_strategy(pr, *chosen), canon);
        out.elapsed = since(t0);
        return out;
    };

    // The first question is (1,1,1) up to relabeling.
    Node root;
    {
        Node empty = root_node(pr);
        std::vector<int> remap, sizes;
        extend(pr, empty, 0, root, remap, sizes);
    }
    out.nodes_explored = 1;
    if (root.n_classes == pr.n_secrets) {
        const auto w = pad(pr, root.chosen);
        return finish(SearchStatus::FoundWitness, &w);
    }
    if (k == 1 || pruned(pr, root))
        return finish(SearchStatus::ExhaustedNone, nullptr);

    // Distinct two-question prefixes, in question order.
    std::vector<Node> starts;
    {
        KeySet seen;
        std::vector<int> remap, sizes;
        for (int q = 1; q < pr.n_secrets; ++q) {
            Node child;
            extend(pr, root, q, child, remap, sizes);
            ++out.nodes_explored;
            auto key = key_of(triples_of(pr, child.chosen), pr.params);
            if (!seen.insert(std::move(key)).second)
                continue;
            if (child.n_classes == pr.n_secrets) {
                const auto w = pad(pr, child.chosen);
                return finish(SearchStatus::FoundWitness, &w);
            }
            if (k == 2 || pruned(pr, child))
                continue;
            starts.push_back(std::move(child));
        }
    }

    const int n = int(starts.size());
    std::vector<BranchResult> results(std::size_t(n), BranchResult::Stopped);
    std::vector<std::uint64_t> nodes(std::size_t(n), 0);
    std::vector<std::vector<int>> witnesses{std::size_t(n)};
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < n; i = next++) {
            if (pr.winner.load() < i || pr.out_of_budget.load())
                continue;
            Branch br(pr, i);
            results[std::size_t(i)] = br.run(starts[std::size_t(i)]);
            nodes[std::size_t(i)] = br.nodes();
            if (results[std::size_t(i)] == BranchResult::Found) {
                witnesses[std::size_t(i)] = br.witness();
                int cur = pr.winner.load();
                while (i < cur && !pr.winner.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    const int threads = std::max(1, std::min(budget.threads, n));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    for (int i = 0; i < n; ++i) {
        out.nodes_explored += nodes[std::size_t(i)];
        switch (results[std::size_t(i)]) {
        case BranchResult::Found: return finish(SearchStatus::FoundWitness, &witnesses[std::size_t(i)]);
        case BranchResult::Stopped: return finish(SearchStatus::BudgetExceeded, nullptr);
        case BranchResult::Exhausted: break;
        }
    }
    return finish(SearchStatus::ExhaustedNone, nullptr);
}

SearchOutcome min_feasible_size(const Params& params, const SearchBudget& budget)
{
    const auto t0 = Clock::now();
    const int lo = lower_bound(params).value;
    const int hi = upper_bound(params).value;
    SearchOutcome out;
    std::uint64_t nodes = 0;
    for (int k = lo; k < hi; ++k) {
        SearchBudget left = budget;
        left.time_limit = budget.time_limit - since(t0);
        left.node_limit = budget.node_limit > nodes ? budget.node_limit - nodes : 0;
        out = exists_feasible(params, k, left);
        nodes += out.nodes_explored;
        out.nodes_explored = nodes;
        out.elapsed = since(t0);
        if (out.status != SearchStatus::ExhaustedNone) {
            out.last_exhausted = k > lo ? k - 1 : -1;
            return out;
        }
    }
    out.status = SearchStatus::FoundWitness;
    out.size = hi;
    out.witness = construct(params);
    out.nodes_explored = nodes;
    out.last_exhausted = hi > lo ? hi - 1 : -1;
    out.elapsed = since(t0);
    return out;
}

} // namespace mmdim
