#include "topoinf/grammars.hpp"

#include <algorithm>

namespace topoinf {

void validate(const GrammarSpec& spec)
{
    const std::size_t q = spec.states();
    if (q == 0)
        throw InputError("grammar '" + spec.name + "' has no states");
    if (spec.accepting.size() != q)
        throw InputError("grammar '" + spec.name + "' accept table size mismatch");
    if (spec.start >= q)
        throw InputError("grammar '" + spec.name + "' start state out of range");
    for (const auto& row : spec.transition)
        for (auto t : row)
            if (t >= q)
                throw InputError("grammar '" + spec.name + "' transition target out of range");
}

GrammarSpec builtin_grammar(int g)
{
    GrammarSpec s;
    switch (g) {
    case 1:
        // 0: ones so far, 1: dead
        s.name = "g1";
        s.transition = {{1, 0}, {1, 1}};
        s.accepting = {true, false};
        break;
    case 2:
        // state = 2 * (zeros odd) + (ones odd)
        s.name = "g2";
        s.transition = {{2, 1}, {3, 0}, {0, 3}, {1, 2}};
        s.accepting = {true, false, false, false};
        break;
    case 3:
        // 0: start, 1: 1+, 2: 0+, 3: 0*1, 4: dead
        s.name = "g3";
        s.transition = {{2, 1}, {4, 1}, {2, 3}, {4, 4}, {4, 4}};
        s.accepting = {true, true, true, true, false};
        break;
    case 4:
        // 0: free (after even 1-run or unconstrained 0s), 1: odd 1-run,
        // 2: odd 0-run after odd 1-run, 3: even 0-run after odd 1-run, 4: dead
        s.name = "g4";
        s.transition = {{0, 1}, {2, 0}, {3, 4}, {2, 1}, {4, 4}};
        s.accepting = {true, true, false, true, false};
        break;
    default: throw InputError("built-in grammars are numbered 1 to 4, got " + std::to_string(g));
    }
    return s;
}

bool accepts(const GrammarSpec& spec, std::string_view s)
{
    std::size_t state = spec.start;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw InputError(std::string("symbol '") + c + "' is not in the alphabet {0,1}");
        state = spec.transition[state][c == '1'];
    }
    return spec.accepting[state];
}

namespace {

// Product walk: extend prefixes symbol by symbol, pruning states that cannot
// reach the wanted verdict in the remaining number of steps.
std::vector<std::string> walk(const GrammarSpec& spec, std::size_t length, bool want_accept)
{
    validate(spec);
    const std::size_t q = spec.states();
    // can[r][s]: from state s, some string of exactly r symbols ends with the wanted verdict.
    std::vector<std::vector<bool>> can(length + 1, std::vector<bool>(q));
    for (std::size_t s = 0; s < q; ++s)
        can[0][s] = spec.accepting[s] == want_accept;
    for (std::size_t r = 1; r <= length; ++r)
        for (std::size_t s = 0; s < q; ++s)
            can[r][s] = can[r - 1][spec.transition[s][0]] || can[r - 1][spec.transition[s][1]];

    std::vector<std::string> out;
    if (!can[length][spec.start])
        return out;
    std::string prefix;
    prefix.reserve(length);
    auto rec = [&](auto&& self, std::size_t state) -> void {
        const std::size_t left = length - prefix.size();
        if (left == 0) {
            out.push_back(prefix);
            return;
        }
        for (int sym = 0; sym < 2; ++sym) {
            const std::size_t next = spec.transition[state][sym];
            if (can[left - 1][next]) {
                prefix.push_back(static_cast<char>('0' + sym));
                self(self, next);
                prefix.pop_back();
            }
        }
    };
    rec(rec, spec.start);
    return out;
}

} // namespace

std::vector<std::string> enumerate_strings(const GrammarSpec& spec, std::size_t length)
{
    return walk(spec, length, true);
}

std::vector<std::string> enumerate_rejected(const GrammarSpec& spec, std::size_t length)
{
    return walk(spec, length, false);
}

std::vector<LabeledString> grammar_dataset(const GrammarSpec& spec, std::size_t min_len, std::size_t max_len,
                                           bool with_negatives)
{
    if (min_len > max_len)
        throw InputError("length range is empty");
    std::vector<LabeledString> out;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        for (auto& s : enumerate_strings(spec, len))
            out.push_back({std::move(s), true});
        if (with_negatives)
            for (auto& s : enumerate_rejected(spec, len))
                out.push_back({std::move(s), false});
    }
    return out;
}

InfluenceProfile grammar_entropy(const GrammarSpec& spec, std::size_t length, double r, const MethodSpec& method)
{
    auto strings = enumerate_strings(spec, length);
    if (strings.empty())
        throw InputError("grammar '" + spec.name + "' accepts no string of length " + std::to_string(length));
    return run_influence(LabeledPointSet::from_strings(std::move(strings)), Metric::Edit, r, method);
}

} // namespace topoinf
