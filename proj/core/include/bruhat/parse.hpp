#pragma once

// Text syntax for words.
//
//   "1 2 3 4"            plain word (1-based, separated by spaces or commas)
//   "1 2 3 4 ;x6"        the word repeated six times ("; repeat 6" also works)
//   "e"                  the empty word
//   "w0"                 the greedy longest-element word
//   "-1 +2 -2 +1"        signed word; unsigned letters count as positive

#include <string_view>

#include "bruhat/coxeter.hpp"
#include "bruhat/word.hpp"

namespace bruhat {

Word parse_word(std::string_view text, const CartanSpec& cartan);

SignedWord parse_signed_word(std::string_view text, const CartanSpec& cartan);

/// Parses a 0/1 shuffle pattern such as "0101" or "0 1 0 1".
std::vector<int> parse_pattern(std::string_view text);

}  // namespace bruhat
