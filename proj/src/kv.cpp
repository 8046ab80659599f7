#include "dilemma/kv.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "dilemma/errors.hpp"

namespace dilemma::kv {

Pairs parse(std::string_view text) {
  Pairs out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      ++i;
    }
    std::string_view token = text.substr(start, i - start);
    std::size_t eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParamDomainError("malformed key=value token: '" +
                             std::string(token) + "'");
    }
    out.emplace_back(std::string(token.substr(0, eq)),
                     std::string(token.substr(eq + 1)));
  }
  return out;
}

const std::string* find(const Pairs& pairs, std::string_view key) {
  for (const auto& [k, v] : pairs) {
    if (k == key) return &v;
  }
  return nullptr;
}

const std::string& require(const Pairs& pairs, std::string_view key,
                           std::string_view context) {
  if (const std::string* v = find(pairs, key)) return *v;
  throw ParamDomainError(std::string(context) + ": missing key '" +
                         std::string(key) + "'");
}

double to_double(std::string_view value, std::string_view key) {
  std::string s(value);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw ParamDomainError("key '" + std::string(key) +
                           "': not a decimal value: '" + s + "'");
  }
  return v;
}

long long to_int(std::string_view value, std::string_view key) {
  std::string s(value);
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') {
    throw ParamDomainError("key '" + std::string(key) +
                           "': not an integer value: '" + s + "'");
  }
  return v;
}

std::vector<double> to_double_list(std::string_view value,
                                   std::string_view key) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i <= value.size()) {
    std::size_t comma = value.find(',', i);
    if (comma == std::string_view::npos) comma = value.size();
    out.push_back(to_double(value.substr(i, comma - i), key));
    i = comma + 1;
    if (comma == value.size()) break;
  }
  if (out.empty()) {
    throw ParamDomainError("key '" + std::string(key) + "': empty list");
  }
  return out;
}

}  // namespace dilemma::kv
