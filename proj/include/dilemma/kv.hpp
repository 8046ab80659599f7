#ifndef DILEMMA_KV_HPP
#define DILEMMA_KV_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dilemma::kv {

// Flat key=value text: whitespace-separated tokens, lower-case keys,
// '#' starts a comment that runs to end of line. Shared by the game
// serialization and the sweep config files.
using Pairs = std::vector<std::pair<std::string, std::string>>;

Pairs parse(std::string_view text);

// nullptr when absent; duplicate keys resolve to the first occurrence
const std::string* find(const Pairs& pairs, std::string_view key);

// throws ParamDomainError naming the missing key
const std::string& require(const Pairs& pairs, std::string_view key,
                           std::string_view context);

// strict numeric conversions; throw ParamDomainError naming the key
double to_double(std::string_view value, std::string_view key);
long long to_int(std::string_view value, std::string_view key);

// comma-separated list of decimals, e.g. "2,4,6"
std::vector<double> to_double_list(std::string_view value, std::string_view key);

}  // namespace dilemma::kv

#endif  // DILEMMA_KV_HPP
