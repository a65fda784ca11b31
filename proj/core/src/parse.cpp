#include "bruhat/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "bruhat/error.hpp"

namespace bruhat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != ',') {
      ++i;
    }
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

// Splits off an optional "; xK" / "; repeat K" suffix.
std::pair<std::string_view, int> split_repeat(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) return {text, 1};
  auto body = text.substr(0, semi);
  auto directive = trim(text.substr(semi + 1));
  if (directive.starts_with("repeat")) {
    directive = trim(directive.substr(6));
  } else if (!directive.empty() && (directive.front() == 'x' || directive.front() == 'X')) {
    directive = trim(directive.substr(1));
  } else {
    throw ParseError("expected ';xK' or '; repeat K', got ';" + std::string(directive) + "'");
  }
  const int times = to_int(directive, "repeat count");
  if (times < 0) throw ParseError("repeat count must be non-negative");
  return {body, times};
}

int to_level(std::string_view token, const CartanSpec& cartan) {
  const int i = to_int(token, "letter");
  if (i < 1 || i > cartan.rank()) {
    throw ParseError("letter " + std::string(token) + " outside [1," +
                     std::to_string(cartan.rank()) + "] for " + cartan.label().to_string());
  }
  return i - 1;
}

}  // namespace

Word parse_word(std::string_view text, const CartanSpec& cartan) {
  const auto trimmed = trim(text);
  if (trimmed == "e" || trimmed.empty()) return {};
  if (trimmed == "w0") return longest_element(cartan);

  const auto [body, times] = split_repeat(trimmed);
  Word base;
  for (auto token : tokens(body)) base.push_back(to_level(token, cartan));
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(times));
  for (int k = 0; k < times; ++k) out.insert(out.end(), base.begin(), base.end());
  return out;
}

SignedWord parse_signed_word(std::string_view text, const CartanSpec& cartan) {
  const auto [body, times] = split_repeat(trim(text));
  std::vector<Letter> base;
  for (auto token : tokens(body)) {
    int sign = 1;
    if (token.front() == '+' || token.front() == '-') {
      sign = token.front() == '-' ? -1 : 1;
      token.remove_prefix(1);
    }
    base.push_back({sign, to_level(token, cartan)});
  }
  std::vector<Letter> out;
  for (int k = 0; k < times; ++k) out.insert(out.end(), base.begin(), base.end());
  return SignedWord(std::move(out));
}

std::vector<int> parse_pattern(std::string_view text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(c - '0');
    } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
      throw ParseError("shuffle pattern may only contain 0 and 1");
    }
  }
  return out;
}

}  // namespace bruhat
