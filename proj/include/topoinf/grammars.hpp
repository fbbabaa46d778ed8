#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "topoinf/shapley.hpp"

namespace topoinf {

/**
 * Complete DFA over the binary alphabet {'0', '1'}.
 *
 * `transition[state][symbol]` is total; symbol 0 is '0', symbol 1 is '1'.
 */
struct GrammarSpec
{
    std::string name;
    std::size_t start = 0;
    std::vector<std::array<std::size_t, 2>> transition;
    std::vector<bool> accepting;

    std::size_t states() const noexcept { return transition.size(); }
};

/// Throws InputError if the transition table or start/accept states are malformed.
void validate(const GrammarSpec& spec);

/**
 * Built-in grammars 1..4:
 *   1: 1*
 *   2: even number of 0s and even number of 1s
 *   3: 1* + 0*(1 + 0)
 *   4: every odd run of 1s followed by 0s is followed by an even run of 0s;
 *      an odd run of 1s at the end of the string is accepted.
 */
GrammarSpec builtin_grammar(int g);

/// DFA run. Throws InputError on a symbol other than '0' or '1'.
bool accepts(const GrammarSpec& spec, std::string_view s);

/// All accepted strings of exactly `length` symbols, lexicographic.
std::vector<std::string> enumerate_strings(const GrammarSpec& spec, std::size_t length);

/// All rejected strings of exactly `length` symbols, lexicographic.
std::vector<std::string> enumerate_rejected(const GrammarSpec& spec, std::size_t length);

struct LabeledString
{
    std::string text;
    bool accepted = false;
};

/**
 * Positive strings for every length in [min_len, max_len], lengths in
 * ascending order; rejected strings are interleaved per length when
 * `with_negatives` is set.
 */
std::vector<LabeledString> grammar_dataset(const GrammarSpec& spec, std::size_t min_len, std::size_t max_len,
                                           bool with_negatives);

/**
 * Influence profile of the language slice of length N under the edit metric.
 *
 * Throws InputError when no string of that length is accepted.
 */
InfluenceProfile grammar_entropy(const GrammarSpec& spec, std::size_t length, double r, const MethodSpec& method);

} // namespace topoinf
