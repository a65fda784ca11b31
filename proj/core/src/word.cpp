#include "bruhat/word.hpp"

#include <algorithm>

#include "bruhat/error.hpp"

namespace bruhat {

namespace {

template <typename Vec>
bool is_negative(const Vec& v) {
  bool any = false;
  for (auto c : v) {
    if (c > 0) return false;
    any = any || c < 0;
  }
  return any;
}

void check_levels(const Word& word, int rank) {
  for (int i : word) {
    if (i < 0 || i >= rank) {
      throw InvalidArgument("generator " + std::to_string(i + 1) + " outside [1," +
                            std::to_string(rank) + "]");
    }
  }
}

}  // namespace

std::size_t draw_index(WalkRng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.rank_ = rank;
  w.matrix_.assign(static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank), 0);
  for (int i = 0; i < rank; ++i) w.matrix_[static_cast<std::size_t>(i * rank + i)] = 1;
  return w;
}

std::vector<std::int64_t> WeylElement::image_of_simple(int j) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(rank_));
  for (int r = 0; r < rank_; ++r) out[r] = at(r, j);
  return out;
}

std::vector<std::int64_t> WeylElement::apply(const RootVector& root) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(rank_), 0);
  for (int r = 0; r < rank_; ++r) {
    std::int64_t acc = 0;
    for (int c = 0; c < rank_; ++c) acc += at(r, c) * root[c];
    out[r] = acc;
  }
  return out;
}

void WeylElement::multiply_simple(int i, const CartanSpec& cartan) {
  // Column j of s_i is alpha_j - a_ji alpha_i, so (M s_i)[:, j] = M[:, j] - a_ji M[:, i].
  const auto n = static_cast<std::size_t>(rank_);
  for (int j = 0; j < rank_; ++j) {
    if (j == i) continue;
    const std::int64_t a = cartan.reflection_entry(j, i);
    if (a == 0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      matrix_[r * n + static_cast<std::size_t>(j)] -= a * matrix_[r * n + static_cast<std::size_t>(i)];
    }
  }
  for (std::size_t r = 0; r < n; ++r) matrix_[r * n + static_cast<std::size_t>(i)] *= -1;
}

WordLength word_length(const Word& word, const RootSystem& roots) {
  const auto& cartan = roots.cartan();
  check_levels(word, cartan.rank());
  WordLength result{WeylElement::identity(cartan.rank()), false};
  for (int i : word) result.element.multiply_simple(i, cartan);

  int inversions = 0;
  for (const auto& beta : roots.positive_roots()) {
    if (is_negative(result.element.apply(beta))) ++inversions;
  }
  result.element.length_ = inversions;
  result.is_reduced = inversions == static_cast<int>(word.size());
  return result;
}

bool is_reduced(const Word& word, const CartanSpec& cartan) {
  check_levels(word, cartan.rank());
  auto w = WeylElement::identity(cartan.rank());
  for (int i : word) {
    if (is_negative(w.image_of_simple(i))) return false;
    w.multiply_simple(i, cartan);
  }
  return true;
}

Word longest_element(const CartanSpec& cartan, std::size_t max_length) {
  Word word;
  auto w = WeylElement::identity(cartan.rank());
  for (;;) {
    bool extended = false;
    for (int i = 0; i < cartan.rank(); ++i) {
      if (is_negative(w.image_of_simple(i))) continue;
      word.push_back(i);
      w.multiply_simple(i, cartan);
      extended = true;
      break;
    }
    if (!extended) return word;
    if (word.size() > max_length) {
      throw InvalidArgument("no longest element found within " + std::to_string(max_length) +
                            " letters; " + cartan.label().to_string() + " looks infinite");
    }
  }
}

Word longest_element(const RootSystem& roots) {
  return longest_element(roots.cartan(), roots.size());
}

std::set<Word> braid_neighbors(const Word& word, const CartanSpec& cartan) {
  check_levels(word, cartan.rank());
  std::set<Word> out;
  const std::size_t d = word.size();
  for (std::size_t p = 0; p + 1 < d; ++p) {
    const int a = word[p];
    const int b = word[p + 1];
    if (a == b) continue;
    const int m = cartan.coxeter_exponent(a, b);
    if (m == 0 || p + static_cast<std::size_t>(m) > d) continue;
    bool alternating = true;
    for (int k = 0; k < m; ++k) {
      if (word[p + static_cast<std::size_t>(k)] != (k % 2 == 0 ? a : b)) {
        alternating = false;
        break;
      }
    }
    if (!alternating) continue;
    Word next = word;
    for (int k = 0; k < m; ++k) next[p + static_cast<std::size_t>(k)] = (k % 2 == 0 ? b : a);
    out.insert(std::move(next));
  }
  return out;
}

Word braid_walk(const Word& word, const CartanSpec& cartan, int steps, WalkRng& rng) {
  Word current = word;
  for (int s = 0; s < steps; ++s) {
    const auto neighbours = braid_neighbors(current, cartan);
    if (neighbours.empty()) break;
    auto it = neighbours.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(draw_index(rng, neighbours.size())));
    current = *it;
  }
  return current;
}

Word SignedWord::u_part() const {
  Word out;
  for (const auto& l : letters_) {
    if (l.sign < 0) out.push_back(l.index);
  }
  return out;
}

Word SignedWord::v_part() const {
  Word out;
  for (const auto& l : letters_) {
    if (l.sign > 0) out.push_back(l.index);
  }
  return out;
}

std::vector<int> SignedWord::pattern() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.sign > 0 ? 1 : 0);
  return out;
}

std::string SignedWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.sign > 0 ? '+' : '-';
    out += std::to_string(l.index + 1);
  }
  return out;
}

std::vector<int> default_pattern(std::size_t u_length, std::size_t v_length) {
  std::vector<int> pattern(u_length, 0);
  pattern.resize(u_length + v_length, 1);
  return pattern;
}

std::vector<int> random_pattern(std::size_t u_length, std::size_t v_length, WalkRng& rng) {
  auto pattern = default_pattern(u_length, v_length);
  for (std::size_t k = pattern.size(); k > 1; --k) {
    std::swap(pattern[k - 1], pattern[draw_index(rng, k)]);
  }
  return pattern;
}

SignedWord make_signed_word(const Word& u_word, const Word& v_word, const std::vector<int>& pattern,
                            const CartanSpec& cartan) {
  const auto zeros = static_cast<std::size_t>(std::count(pattern.begin(), pattern.end(), 0));
  if (pattern.size() != u_word.size() + v_word.size() || zeros != u_word.size()) {
    throw InvalidArgument("shuffle pattern must have length l(u)+l(v) with l(u) zeros");
  }
  if (std::any_of(pattern.begin(), pattern.end(), [](int p) { return p != 0 && p != 1; })) {
    throw InvalidArgument("shuffle pattern entries must be 0 or 1");
  }
  if (!is_reduced(u_word, cartan)) {
    throw NotReducedError("u word '" + word_to_string(u_word) + "' is not reduced");
  }
  if (!is_reduced(v_word, cartan)) {
    throw NotReducedError("v word '" + word_to_string(v_word) + "' is not reduced");
  }
  std::vector<Letter> letters;
  letters.reserve(pattern.size());
  std::size_t iu = 0;
  std::size_t iv = 0;
  for (int p : pattern) {
    if (p == 0) {
      letters.push_back({-1, u_word[iu++]});
    } else {
      letters.push_back({+1, v_word[iv++]});
    }
  }
  return SignedWord(std::move(letters));
}

void require_reduced(const SignedWord& word, const CartanSpec& cartan) {
  for (const auto& l : word.letters()) {
    if (l.sign != 1 && l.sign != -1) throw InvalidArgument("letter sign must be +1 or -1");
  }
  if (!is_reduced(word.u_part(), cartan)) {
    throw NotReducedError("negative subword '" + word_to_string(word.u_part()) +
                          "' is not reduced");
  }
  if (!is_reduced(word.v_part(), cartan)) {
    throw NotReducedError("positive subword '" + word_to_string(word.v_part()) +
                          "' is not reduced");
  }
}

std::string word_to_string(const Word& word) {
  std::string out;
  for (int i : word) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1);
  }
  return out;
}

}  // namespace bruhat
