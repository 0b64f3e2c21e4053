#include "mmdim/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mmdim/io.hpp"

namespace mmdim {

char type_letter(QuestionType t)
{
    switch (t) {
    case QuestionType::A: return 'A';
    case QuestionType::B: return 'B';
    case QuestionType::C: return 'C';
    case QuestionType::D: return 'D';
    case QuestionType::E: return 'E';
    case QuestionType::F: return 'F';
    case QuestionType::Other: break;
    }
    return '-';
}

QuestionType type_of(const OccurrenceProfile& p)
{
    using enum QuestionType;
    static constexpr std::array<std::pair<std::array<int, kPegs>, QuestionType>, 6> table{{
        {{1, 2, 2}, A}, {{2, 1, 2}, B}, {{2, 2, 1}, C},
        {{2, 1, 1}, D}, {{1, 2, 1}, E}, {{1, 1, 2}, F},
    }};
    for (const auto& [f, t] : table) {
        if (p.f == f)
            return t;
    }
    return Other;
}

Peg single_peg(QuestionType t)
{
    switch (t) {
    case QuestionType::A: return 0;
    case QuestionType::B: return 1;
    case QuestionType::C: return 2;
    default: return -1;
    }
}

namespace {

/// occurrences[peg][color] over the whole strategy; index 0 unused.
std::array<std::vector<int>, kPegs> occurrences(const Strategy& s)
{
    std::array<std::vector<int>, kPegs> occ;
    for (Peg p = 0; p < kPegs; ++p)
        occ[p].assign(static_cast<std::size_t>(s.params().colors(p)) + 1, 0);
    for (const auto& q : s) {
        for (Peg p = 0; p < kPegs; ++p)
            ++occ[p][static_cast<std::size_t>(q[p])];
    }
    return occ;
}

std::vector<OccurrenceProfile> profiles(const Strategy& s)
{
    const auto occ = occurrences(s);
    std::vector<OccurrenceProfile> out;
    out.reserve(s.size());
    for (const auto& q : s) {
        OccurrenceProfile prof;
        for (Peg p = 0; p < kPegs; ++p)
            prof.f[p] = occ[p][static_cast<std::size_t>(q[p])];
        out.push_back(prof);
    }
    return out;
}

} // namespace

std::vector<ClassifiedQuestion> classify_questions(const Strategy& strategy)
{
    std::vector<ClassifiedQuestion> out;
    for (const auto& prof : profiles(strategy))
        out.push_back({prof, type_of(prof)});
    return out;
}

bool is_abc_only(const Strategy& strategy)
{
    const auto cls = classify_questions(strategy);
    return std::all_of(cls.begin(), cls.end(), [](const ClassifiedQuestion& c) {
        return c.type == QuestionType::A || c.type == QuestionType::B || c.type == QuestionType::C;
    });
}

const char* to_string(BlockShape shape)
{
    switch (shape) {
    case BlockShape::Path: return "path";
    case BlockShape::Cycle: return "cycle";
    case BlockShape::Other: break;
    }
    return "other";
}

int StrategyGraph::degree(std::size_t v) const
{
    int d = 0;
    for (const auto& e : edges) {
        if (e.u == v || e.v == v)
            d += e.multiplicity;
    }
    return d;
}

StrategyGraph build_strategy_graph(const Strategy& strategy)
{
    StrategyGraph g;
    const std::size_t n = strategy.size();
    g.vertex_count = n;

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };

    std::vector<int> degree(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const int m = match_count(strategy[u], strategy[v]);
            if (m != 1 && m != 2)
                continue;
            g.edges.push_back({u, v, m});
            degree[u] += m;
            degree[v] += m;
            parent[find(u)] = find(v);
        }
    }

    std::map<std::size_t, std::size_t> block_of_root;
    for (std::size_t v = 0; v < n; ++v) {
        auto [it, inserted] = block_of_root.try_emplace(find(v), g.blocks.size());
        if (inserted)
            g.blocks.emplace_back();
        g.blocks[it->second].vertices.push_back(v);
    }

    for (auto& block : g.blocks) {
        const auto& vs = block.vertices;
        if (vs.size() == 1) {
            block.shape = BlockShape::Path; // trivial path
            continue;
        }
        const auto ones = std::count_if(vs.begin(), vs.end(), [&](std::size_t v) { return degree[v] == 1; });
        const auto twos = std::count_if(vs.begin(), vs.end(), [&](std::size_t v) { return degree[v] == 2; });
        if (twos == static_cast<std::ptrdiff_t>(vs.size()))
            block.shape = BlockShape::Cycle;
        else if (ones == 2 && ones + twos == static_cast<std::ptrdiff_t>(vs.size()))
            block.shape = BlockShape::Path;
        else
            block.shape = BlockShape::Other;
    }
    return g;
}

MissingColors missing_colors(const Strategy& strategy)
{
    const auto occ = occurrences(strategy);
    MissingColors missing;
    for (Peg p = 0; p < kPegs; ++p) {
        for (Color col = 1; col <= strategy.params().colors(p); ++col) {
            if (occ[p][static_cast<std::size_t>(col)] == 0)
                missing[p].push_back(col);
        }
    }
    return missing;
}

bool PatternReport::has(int pattern) const
{
    return std::any_of(hits.begin(), hits.end(), [&](const PatternHit& h) { return h.pattern == pattern; });
}

namespace {

using Index = std::size_t;
using IndexPair = std::pair<Index, Index>;

/// Pattern search over an ABC-only strategy. Types are encoded as their
/// single peg: A=0, B=1, C=2.
class PatternFinder
{
public:
    explicit PatternFinder(const Strategy& s)
      : n_(s.size()), neighbors_(n_)
    {
        for (const auto& c : classify_questions(s))
            type_.push_back(single_peg(c.type));
        for (Index u = 0; u < n_; ++u) {
            for (Index v = u + 1; v < n_; ++v) {
                const int m = match_count(s[u], s[v]);
                if (m == 1) {
                    neighbors_[u].push_back(v);
                    neighbors_[v].push_back(u);
                    neighbor_pairs_.emplace_back(u, v);
                } else if (m == 2) {
                    double_pairs_.emplace_back(u, v);
                }
            }
        }
        for (auto& list : neighbors_)
            std::sort(list.begin(), list.end());
        const auto missing = missing_colors(s);
        for (Peg p = 0; p < kPegs; ++p) {
            missing_count_[p] = static_cast<int>(missing[p].size());
        }
    }

    bool missing(Peg p) const { return missing_count_[p] > 0; }
    int missing_count(Peg p) const { return missing_count_[p]; }

    /// First ordered tuple (lexicographic in indices) of distinct questions,
    /// consecutive ones neighboring, whose types follow `pattern`.
    std::optional<std::vector<Index>> sequence(const std::vector<int>& pattern) const
    {
        std::vector<Index> path;
        std::vector<bool> used(n_, false);
        for (Index v = 0; v < n_; ++v) {
            if (type_[v] != pattern[0])
                continue;
            path.assign(1, v);
            used[v] = true;
            if (extend(path, used, pattern))
                return path;
            used[v] = false;
        }
        return std::nullopt;
    }

    /// Double-neighboring pairs whose questions are both of type t.
    std::vector<IndexPair> double_pairs(int t) const
    {
        std::vector<IndexPair> out;
        for (const auto& [u, v] : double_pairs_) {
            if (type_[u] == t && type_[v] == t)
                out.emplace_back(u, v);
        }
        return out;
    }

    /// Neighboring pairs with one question of type t1 and one of type t2 (t1 != t2).
    std::vector<IndexPair> mixed_pairs(int t1, int t2) const
    {
        std::vector<IndexPair> out;
        for (const auto& [u, v] : neighbor_pairs_) {
            if ((type_[u] == t1 && type_[v] == t2) || (type_[u] == t2 && type_[v] == t1))
                out.emplace_back(u, v);
        }
        return out;
    }

private:
    bool extend(std::vector<Index>& path, std::vector<bool>& used, const std::vector<int>& pattern) const
    {
        if (path.size() == pattern.size())
            return true;
        const int want = pattern[path.size()];
        for (Index w : neighbors_[path.back()]) {
            if (used[w] || type_[w] != want)
                continue;
            path.push_back(w);
            used[w] = true;
            if (extend(path, used, pattern))
                return true;
            used[w] = false;
            path.pop_back();
        }
        return false;
    }

    Index n_;
    std::vector<int> type_;
    std::vector<std::vector<Index>> neighbors_;
    std::vector<IndexPair> neighbor_pairs_;
    std::vector<IndexPair> double_pairs_;
    std::array<int, kPegs> missing_count_{};
};

/// The two pegs other than `single`, ascending.
std::array<Peg, 2> double_pegs(Peg single)
{
    std::array<Peg, 2> out{};
    int k = 0;
    for (Peg p = 0; p < kPegs; ++p) {
        if (p != single)
            out[static_cast<std::size_t>(k++)] = p;
    }
    return out;
}

std::vector<Index> concat(const IndexPair& x, const IndexPair& y)
{
    return {x.first, x.second, y.first, y.second};
}

std::optional<std::vector<Index>> find_pattern(const PatternFinder& pf, int id)
{
    constexpr int kTypes = 3;
    switch (id) {
    case 1:
        for (Peg p = 0; p < kPegs; ++p) {
            if (pf.missing_count(p) >= 2)
                return std::vector<Index>{};
        }
        return std::nullopt;
    case 2:
        if (pf.missing(0) && pf.missing(1) && pf.missing(2))
            return std::vector<Index>{};
        return std::nullopt;
    case 3:
        for (int t = 0; t < kTypes; ++t) {
            const auto dp = double_pegs(t);
            if (!pf.missing(dp[0]) || !pf.missing(dp[1]))
                continue;
            if (auto seq = pf.sequence({t, t, t}))
                return seq;
        }
        return std::nullopt;
    case 4:
        for (int t = 0; t < kTypes; ++t) {
            const auto pairs = pf.double_pairs(t);
            if (pairs.empty())
                continue;
            if (auto seq = pf.sequence({t, t, t})) {
                seq->push_back(pairs.front().first);
                seq->push_back(pairs.front().second);
                return seq;
            }
        }
        return std::nullopt;
    case 5:
        for (int t1 = 0; t1 < kTypes; ++t1) {
            for (int t2 = 0; t2 < kTypes; ++t2) {
                if (t1 == t2 || !pf.missing(kPegs - t1 - t2))
                    continue;
                if (auto seq = pf.sequence({t1, t1, t2, t2}))
                    return seq;
            }
        }
        return std::nullopt;
    case 6: {
        std::array<int, kTypes> perm{0, 1, 2};
        do {
            if (auto seq = pf.sequence({perm[0], perm[0], perm[1], perm[2], perm[2]}))
                return seq;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::nullopt;
    }
    case 7:
        for (int t1 = 0; t1 < kTypes; ++t1) {
            for (int t2 = t1 + 1; t2 < kTypes; ++t2) {
                const auto pairs = pf.mixed_pairs(t1, t2);
                if (pairs.size() >= 2)
                    return concat(pairs[0], pairs[1]);
            }
        }
        return std::nullopt;
    case 8:
        for (int t2 = 0; t2 < kTypes; ++t2) {
            if (!pf.missing(t2))
                continue;
            const auto pairs = pf.double_pairs(t2);
            if (pairs.empty())
                continue;
            for (int t1 = 0; t1 < kTypes; ++t1) {
                if (t1 == t2)
                    continue;
                if (auto seq = pf.sequence({t1, t2})) {
                    seq->push_back(pairs.front().first);
                    seq->push_back(pairs.front().second);
                    return seq;
                }
            }
        }
        return std::nullopt;
    case 9:
        for (int t = 0; t < kTypes; ++t) {
            const auto dp = double_pegs(t);
            if (!pf.missing(dp[0]) || !pf.missing(dp[1]))
                continue;
            const auto pairs = pf.double_pairs(t);
            if (!pairs.empty())
                return std::vector<Index>{pairs.front().first, pairs.front().second};
        }
        return std::nullopt;
    case 10:
        for (int t = 0; t < kTypes; ++t) {
            const auto pairs = pf.double_pairs(t);
            if (pairs.size() >= 2)
                return concat(pairs[0], pairs[1]);
        }
        return std::nullopt;
    case 11:
        for (int t1 = 0; t1 < kTypes; ++t1) {
            for (int t2 = t1 + 1; t2 < kTypes; ++t2) {
                if (!pf.missing(t1) || !pf.missing(t2))
                    continue;
                const auto p1 = pf.double_pairs(t1);
                const auto p2 = pf.double_pairs(t2);
                if (!p1.empty() && !p2.empty())
                    return concat(p1.front(), p2.front());
            }
        }
        return std::nullopt;
    case 12: {
        std::vector<Index> witness;
        for (int t = 0; t < kTypes; ++t) {
            const auto pairs = pf.double_pairs(t);
            if (pairs.empty())
                return std::nullopt;
            witness.push_back(pairs.front().first);
            witness.push_back(pairs.front().second);
        }
        return witness;
    }
    default:
        return std::nullopt;
    }
}

} // namespace

PatternReport detect_patterns(const Strategy& strategy)
{
    PatternReport report;
    report.applicable = is_abc_only(strategy);
    if (!report.applicable)
        return report;
    const PatternFinder pf(strategy);
    for (int id = 1; id <= 12; ++id) {
        if (auto witness = find_pattern(pf, id))
            report.hits.push_back({id, std::move(*witness)});
    }
    return report;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::CertifiedFeasible: return "certified-feasible";
    case Verdict::CertifiedInfeasible: return "certified-infeasible";
    case Verdict::Unknown: break;
    }
    return "unknown";
}

Certificate certify_feasible(const Strategy& strategy)
{
    const auto report = detect_patterns(strategy);
    if (!report.applicable)
        return {};
    if (report.hits.empty())
        return {Verdict::CertifiedFeasible, std::nullopt};
    for (const auto& hit : report.hits) {
        if (hit.pattern != 2)
            return {Verdict::CertifiedInfeasible, hit.pattern};
    }
    return {};
}

std::vector<FilterViolation> check_structural_filters(const Strategy& strategy)
{
    const auto prof = profiles(strategy);
    const auto missing = missing_colors(strategy);
    const std::size_t n = strategy.size();
    std::vector<FilterViolation> out;

    auto once = [&](Index i, Peg p) { return prof[i][p] == 1; };
    auto has_missing = [&](Peg p) { return !missing[p].empty(); };
    // Questions whose colors on pegs p and r both occur once: (1,1,*) and friends.
    auto singles_on = [&](Peg p, Peg r) {
        std::vector<Index> v;
        for (Index i = 0; i < n; ++i) {
            if (once(i, p) && once(i, r))
                v.push_back(i);
        }
        return v;
    };
    static constexpr std::array<std::pair<Peg, Peg>, 3> kPegPairs{{{0, 1}, {0, 2}, {1, 2}}};
    auto label = [](Peg p, Peg r) {
        std::string s = "(*,*,*)";
        s[static_cast<std::size_t>(1 + 2 * p)] = '1';
        s[static_cast<std::size_t>(1 + 2 * r)] = '1';
        return s;
    };

    // (a)
    for (Peg p = 0; p < kPegs; ++p) {
        if (missing[p].size() >= 2) {
            out.push_back({'a', std::to_string(missing[p].size()) + " colors missing on peg " + std::to_string(p + 1)});
            break;
        }
    }

    // (b)
    for (const auto& [p, r] : kPegPairs) {
        if (singles_on(p, r).size() >= 2) {
            out.push_back({'b', "two " + label(p, r) + "-questions"});
            break;
        }
    }

    // (c)
    {
        const auto s01 = singles_on(0, 1);
        const auto s02 = singles_on(0, 2);
        const auto s12 = singles_on(1, 2);
        bool found = false;
        for (Index i : s01) {
            for (Index j : s02) {
                for (Index k : s12) {
                    if (i != j && j != k && i != k)
                        found = true;
                }
            }
        }
        if (found)
            out.push_back({'c', "distinct (1,1,*), (1,*,1) and (*,1,1) questions"});
    }

    // (d) and (e)
    {
        std::optional<FilterViolation> d, e;
        for (const auto& [p, r] : kPegPairs) {
            if (!has_missing(p) || !has_missing(r))
                continue;
            const Peg t = kPegs - p - r;
            if (!d && !singles_on(p, r).empty())
                d = FilterViolation{'d', "missing colors on pegs " + std::to_string(p + 1) + "," +
                                             std::to_string(r + 1) + " and a " + label(p, r) + "-question"};
            if (!e && !singles_on(p, t).empty() && !singles_on(r, t).empty())
                e = FilterViolation{'e', "missing colors on pegs " + std::to_string(p + 1) + "," +
                                             std::to_string(r + 1) + " with both " + label(std::min(p, t), std::max(p, t)) +
                                             " and " + label(std::min(r, t), std::max(r, t)) + " questions"};
        }
        if (d)
            out.push_back(*d);
        if (e)
            out.push_back(*e);
    }

    // (f) and (g): for each single peg s with double pegs p < r.
    {
        std::optional<FilterViolation> f, g;
        for (Peg s = 0; s < kPegs; ++s) {
            const auto [p, r] = double_pegs(s);
            const bool consequence_broken = !singles_on(p, r).empty() || (has_missing(p) && has_missing(r));
            if (!consequence_broken)
                continue;
            auto is_t = [&](Index i) { return prof[i][p] == 2 && prof[i][r] == 2 && prof[i][s] == 1; };
            auto agree_only_on = [&](Index i, Index j, Peg peg) {
                return match_count(strategy[i], strategy[j]) == 1 && strategy[i][peg] == strategy[j][peg];
            };
            for (Index i = 0; i < n && !(f && g); ++i) {
                if (!is_t(i))
                    continue;
                for (Index j = i + 1; j < n && !f; ++j) {
                    if (is_t(j) && strategy[i][p] == strategy[j][p] && strategy[i][r] == strategy[j][r])
                        f = FilterViolation{'f', "double-neighboring questions " + std::to_string(i + 1) + "," +
                                                     std::to_string(j + 1)};
                }
                if (g)
                    continue;
                bool via_p = false, via_r = false;
                for (Index j = 0; j < n; ++j) {
                    if (j == i || !once(j, s))
                        continue;
                    if (prof[j][p] == 2 && agree_only_on(i, j, p))
                        via_p = true;
                    if (prof[j][r] == 2 && agree_only_on(i, j, r))
                        via_r = true;
                }
                if (via_p && via_r)
                    g = FilterViolation{'g', "question " + std::to_string(i + 1) +
                                                 " with single-peg neighbors on both double pegs"};
            }
        }
        if (f)
            out.push_back(*f);
        if (g)
            out.push_back(*g);
    }

    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.clause < r.clause; });
    return out;
}

nlohmann::json analysis_json(const Strategy& strategy)
{
    using nlohmann::json;
    json questions = json::array();
    const auto cls = classify_questions(strategy);
    for (std::size_t i = 0; i < strategy.size(); ++i) {
        questions.push_back({{"index", i + 1},
                             {"question", to_json(strategy[i])},
                             {"profile", cls[i].profile.f},
                             {"type", std::string(1, type_letter(cls[i].type))}});
    }

    const auto graph = build_strategy_graph(strategy);
    json blocks = json::array();
    for (const auto& b : graph.blocks) {
        json vs = json::array();
        for (auto v : b.vertices)
            vs.push_back(v + 1);
        blocks.push_back({{"questions", vs}, {"shape", to_string(b.shape)}});
    }
    json edges = json::array();
    for (const auto& e : graph.edges)
        edges.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"multiplicity", e.multiplicity}});

    const auto missing = missing_colors(strategy);
    const auto report = detect_patterns(strategy);
    json hits = json::array();
    for (const auto& h : report.hits) {
        json w = json::array();
        for (auto v : h.witness)
            w.push_back(v + 1);
        hits.push_back({{"pattern", h.pattern}, {"witness", w}});
    }
    const auto cert = certify_feasible(strategy);
    json certificate = {{"verdict", to_string(cert.verdict)}};
    if (cert.pattern)
        certificate["pattern"] = *cert.pattern;

    json filters = json::array();
    for (const auto& v : check_structural_filters(strategy))
        filters.push_back({{"clause", std::string(1, v.clause)}, {"detail", v.detail}});

    return {{"params", to_json(strategy.params())},
            {"questions", questions},
            {"edges", edges},
            {"blocks", blocks},
            {"missing_colors", {missing[0], missing[1], missing[2]}},
            {"patterns", {{"applicable", report.applicable}, {"hits", hits}}},
            {"certificate", certificate},
            {"structural_violations", filters}};
}

std::string analysis_text(const Strategy& strategy)
{
    std::ostringstream os;
    os << "params " << strategy.params() << ", " << strategy.size() << " questions\n";
    const auto cls = classify_questions(strategy);
    for (std::size_t i = 0; i < strategy.size(); ++i) {
        const auto& f = cls[i].profile.f;
        os << "  q" << i + 1 << ' ' << strategy[i] << "  profile (" << f[0] << ',' << f[1] << ',' << f[2]
           << ")  type " << type_letter(cls[i].type) << '\n';
    }
    const auto graph = build_strategy_graph(strategy);
    os << "blocks:\n";
    for (const auto& b : graph.blocks) {
        os << "  " << to_string(b.shape) << " [";
        for (std::size_t k = 0; k < b.vertices.size(); ++k)
            os << (k ? " q" : "q") << b.vertices[k] + 1;
        os << "]\n";
    }
    const auto missing = missing_colors(strategy);
    os << "missing colors:";
    for (Peg p = 0; p < kPegs; ++p) {
        os << " peg" << p + 1 << "={";
        for (std::size_t k = 0; k < missing[p].size(); ++k)
            os << (k ? "," : "") << missing[p][k];
        os << '}';
    }
    os << '\n';
    const auto report = detect_patterns(strategy);
    if (!report.applicable) {
        os << "patterns: not applicable (question types outside A/B/C)\n";
    } else {
        os << "patterns:";
        if (report.hits.empty())
            os << " none";
        for (const auto& h : report.hits)
            os << ' ' << h.pattern;
        os << '\n';
    }
    const auto cert = certify_feasible(strategy);
    os << "certificate: " << to_string(cert.verdict);
    if (cert.pattern)
        os << " (pattern " << *cert.pattern << ')';
    os << '\n';
    const auto filters = check_structural_filters(strategy);
    os << "structural violations:";
    if (filters.empty())
        os << " none";
    os << '\n';
    for (const auto& v : filters)
        os << "  (" << v.clause << ") " << v.detail << '\n';
    return os.str();
}

} // namespace mmdim
