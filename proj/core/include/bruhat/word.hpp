#pragma once

// Reduced words in W and in W x W.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bruhat/coxeter.hpp"

namespace bruhat {

/// A word in the simple reflections, 0-based generator indices.
using Word = std::vector<int>;

/// Deterministic RNG for braid walks and reshuffles. Draws are mapped onto a
/// range with `rng() % n`, so sequences are identical on every platform.
using WalkRng = std::mt19937_64;

std::size_t draw_index(WalkRng& rng, std::size_t n);

struct WordLength;

/// An element of W stored as its matrix on simple-root coordinates: column j
/// is w(alpha_j).

class WeylElement {
 public:
  static WeylElement identity(int rank);

  int rank() const noexcept { return rank_; }
  /// Number of positive roots sent to negative roots (0 until computed by
  /// word_length()).
  int length() const noexcept { return length_; }

  std::int64_t at(int row, int col) const {
    return matrix_[static_cast<std::size_t>(row) * static_cast<std::size_t>(rank_) +
                   static_cast<std::size_t>(col)];
  }
  /// w(alpha_j).
  std::vector<std::int64_t> image_of_simple(int j) const;
  std::vector<std::int64_t> apply(const RootVector& root) const;

  /// w * s_i, using the reflection representation of `cartan`.
  void multiply_simple(int i, const CartanSpec& cartan);

  bool operator==(const WeylElement& other) const {
    return rank_ == other.rank_ && matrix_ == other.matrix_;
  }

 private:
  friend WordLength word_length(const Word& word, const RootSystem& roots);

  int rank_ = 0;
  int length_ = 0;
  std::vector<std::int64_t> matrix_;
};

struct WordLength {
  WeylElement element;
  bool is_reduced = false;
};

/// Product of the word and whether the inversion count equals its length.
WordLength word_length(const Word& word, const RootSystem& roots);

/// Reducedness through the reflection representation: every prefix w must
/// send the next simple root to a positive root. Works for any Coxeter group
/// given by a (generalized) Cartan matrix, including Wt(n,t).
bool is_reduced(const Word& word, const CartanSpec& cartan);

/// Greedy longest element: append the smallest s_i that increases length
/// until none does.
Word longest_element(const RootSystem& roots);

/// Same greedy construction without a root system; throws InvalidArgument
/// when more than `max_length` letters are produced (infinite group).
Word longest_element(const CartanSpec& cartan, std::size_t max_length = 4096);

/// All words one commutation or braid move away from `word` (excluding itself).
std::set<Word> braid_neighbors(const Word& word, const CartanSpec& cartan);

/// Random walk of at most `steps` braid moves, choosing uniformly among the
/// (sorted) neighbours at each step.
Word braid_walk(const Word& word, const CartanSpec& cartan, int steps, WalkRng& rng);

struct Letter {
  int sign = 1;   // +1 for v's alphabet, -1 for u's alphabet
  int index = 0;  // 0-based level

  bool operator==(const Letter&) const = default;
};

/// A word over the alphabet -Pi union Pi.
class SignedWord {
 public:
  SignedWord() = default;
  explicit SignedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  const Letter& operator[](int k) const { return letters_[static_cast<std::size_t>(k)]; }

  /// Subword of negative letters (a word for u).
  Word u_part() const;
  /// Subword of positive letters (a word for v).
  Word v_part() const;
  /// 0 where the letter belongs to u, 1 where it belongs to v.
  std::vector<int> pattern() const;

  /// "-1 +2 -2 +1" (1-based levels).
  std::string to_string() const;

  bool operator==(const SignedWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// u's letters first, then v's.
std::vector<int> default_pattern(std::size_t u_length, std::size_t v_length);

/// Uniformly random shuffle pattern with `u_length` zeros.
std::vector<int> random_pattern(std::size_t u_length, std::size_t v_length, WalkRng& rng);

/// Interleaves u (negative alphabet) and v (positive alphabet) following
/// `pattern`. Throws NotReducedError or InvalidArgument.
SignedWord make_signed_word(const Word& u_word, const Word& v_word, const std::vector<int>& pattern,
                            const CartanSpec& cartan);

/// Throws NotReducedError unless both sign-subwords are reduced and all
/// levels are in range.
void require_reduced(const SignedWord& word, const CartanSpec& cartan);

/// "1 2 1" (1-based).
std::string word_to_string(const Word& word);

}  // namespace bruhat
