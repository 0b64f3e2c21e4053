#include "mmdim/core.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace mmdim {

Params::Params(int a, int b, int c) : Params(std::array<int, kPegs>{a, b, c}) {}

Params::Params(const std::array<int, kPegs>& counts) : counts_(counts)
{
    for (int n : counts_) {
        if (n < 1)
            throw std::invalid_argument("color counts must be positive, got " + std::to_string(n));
    }
}

std::int64_t Params::secret_count() const
{
    return std::int64_t(a()) * b() * c();
}

Params Params::with_colors(Peg peg, int count) const
{
    auto counts = counts_;
    counts.at(static_cast<std::size_t>(peg)) = count;
    return Params(counts);
}

std::ostream& operator<<(std::ostream& os, const Params& p)
{
    return os << '(' << p.a() << ',' << p.b() << ',' << p.c() << ')';
}

std::string to_string(const Params& p)
{
    std::ostringstream os;
    os << p;
    return os.str();
}

CanonicalParams canonicalize(const Params& p)
{
    PegOrder order = kIdentityOrder;
    std::stable_sort(order.begin(), order.end(),
                     [&](Peg l, Peg r) { return p.colors(l) < p.colors(r); });
    return {Params(p.colors(order[0]), p.colors(order[1]), p.colors(order[2])), order};
}

bool Question::valid_for(const Params& p) const
{
    for (Peg i = 0; i < kPegs; ++i) {
        if ((*this)[i] < 1 || (*this)[i] > p.colors(i))
            return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Question& q)
{
    return os << '(' << q[0] << ',' << q[1] << ',' << q[2] << ')';
}

std::string to_string(const Question& q)
{
    std::ostringstream os;
    os << q;
    return os.str();
}

Question permute(const Question& q, const PegOrder& order)
{
    return Question(q[order[0]], q[order[1]], q[order[2]]);
}

Question unpermute(const Question& q, const PegOrder& order)
{
    Question r;
    for (Peg i = 0; i < kPegs; ++i)
        r[order[static_cast<std::size_t>(i)]] = q[i];
    return r;
}

std::int64_t secret_index(const Params& p, const Question& s)
{
    return (std::int64_t(s[0] - 1) * p.b() + (s[1] - 1)) * p.c() + (s[2] - 1);
}

Question secret_at(const Params& p, std::int64_t index)
{
    const auto s3 = static_cast<Color>(index % p.c());
    index /= p.c();
    const auto s2 = static_cast<Color>(index % p.b());
    index /= p.b();
    return Question(static_cast<Color>(index) + 1, s2 + 1, s3 + 1);
}

Strategy::Strategy(Params params) : params_(params) {}

Strategy::Strategy(Params params, std::vector<Question> questions) : params_(params)
{
    questions_.reserve(questions.size());
    for (const auto& q : questions)
        add(q);
}

bool Strategy::contains(const Question& q) const
{
    return std::find(questions_.begin(), questions_.end(), q) != questions_.end();
}

void Strategy::add(const Question& q)
{
    if (!q.valid_for(params_))
        throw std::out_of_range("question " + to_string(q) + " out of range for " + to_string(params_));
    if (contains(q))
        throw std::invalid_argument("duplicate question " + to_string(q));
    questions_.push_back(q);
}

std::vector<Question> Strategy::sorted_questions() const
{
    auto qs = questions_;
    std::sort(qs.begin(), qs.end());
    return qs;
}

Strategy unpermute(const Strategy& s, const CanonicalParams& canon)
{
    std::array<int, kPegs> counts{};
    for (Peg i = 0; i < kPegs; ++i)
        counts[static_cast<std::size_t>(canon.order[static_cast<std::size_t>(i)])] = s.params().colors(i);
    Strategy out{Params(counts)};
    for (const auto& q : s)
        out.add(unpermute(q, canon.order));
    return out;
}

Strategy permute(const Strategy& s, const CanonicalParams& canon)
{
    Strategy out{canon.params};
    for (const auto& q : s)
        out.add(permute(q, canon.order));
    return out;
}

Signature signature(const Strategy& strategy, const Question& secret)
{
    if (!secret.valid_for(strategy.params()))
        throw std::out_of_range("secret " + to_string(secret) + " out of range for " +
                                to_string(strategy.params()));
    Signature sig;
    sig.counts.reserve(strategy.size());
    for (const auto& q : strategy)
        sig.counts.push_back(static_cast<std::uint8_t>(match_count(secret, q)));
    return sig;
}

FeasibilityResult verify_feasible(const Strategy& strategy)
{
    const Params& p = strategy.params();
    const std::int64_t n = p.secret_count();

    // signature bytes -> (first secret, second secret or -1)
    std::unordered_map<std::string, std::pair<std::int64_t, std::int64_t>> seen;
    seen.reserve(static_cast<std::size_t>(n));
    std::string key(strategy.size(), '\0');

    std::optional<std::pair<std::int64_t, std::int64_t>> best;
    for (std::int64_t idx = 0; idx < n; ++idx) {
        const Question s = secret_at(p, idx);
        for (std::size_t k = 0; k < strategy.size(); ++k)
            key[k] = static_cast<char>(match_count(s, strategy[k]));
        auto [it, inserted] = seen.try_emplace(key, idx, -1);
        if (!inserted && it->second.second < 0) {
            it->second.second = idx;
            // Secrets arrive in increasing order, so the first collision of a
            // bucket pairs its two smallest members.
            if (!best || it->second < *best)
                best = it->second;
        }
    }

    FeasibilityResult result;
    if (best) {
        result.feasible = false;
        result.witness = std::make_pair(secret_at(p, best->first), secret_at(p, best->second));
    }
    return result;
}

} // namespace mmdim
