#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyckdiv {

/**
 * A finite word over the alphabet {a, ..., Last}, stored one letter per
 * character. BalancedWord uses {a, b}; TriWord uses {a, b, c}.
 */
template <char Last>
class BasicWord {
public:
  static constexpr char last_letter = Last;

  BasicWord() = default;

  // Throws std::invalid_argument on letters outside the alphabet.
  explicit BasicWord(std::string_view letters) : letters_(letters) {
    for (char ch : letters_)
      if (!in_alphabet(ch))
        throw std::invalid_argument(std::string("letter '") + ch + "' outside alphabet {a.." + Last + "}");
  }

  // Embeds a word over a smaller alphabet.
  template <char Other>
    requires(Other < Last)
  explicit BasicWord(const BasicWord<Other>& w) : letters_(w.letters()) {}

  static constexpr bool in_alphabet(char ch) { return ch >= 'a' && ch <= Last; }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(char ch) {
    if (!in_alphabet(ch))
      throw std::invalid_argument(std::string("letter '") + ch + "' outside alphabet");
    letters_.push_back(ch);
  }

  BasicWord& operator+=(const BasicWord& other) {
    letters_ += other.letters_;
    return *this;
  }
  friend BasicWord operator+(BasicWord lhs, const BasicWord& rhs) { return lhs += rhs; }

  friend bool operator==(const BasicWord&, const BasicWord&) = default;
  friend auto operator<=>(const BasicWord&, const BasicWord&) = default;

private:
  std::string letters_;
};

using BalancedWord = BasicWord<'b'>;
using TriWord = BasicWord<'c'>;

// Unique decomposition of a member word into irreducible members.
template <class Word>
struct Factorization {
  std::vector<Word> factors;

  std::size_t size() const { return factors.size(); }
  Word concatenated() const {
    Word out;
    for (const auto& f : factors) out += f;
    return out;
  }
};

// Human-readable form: the letters, or "ε" for the empty word.
template <char Last>
std::string display(const BasicWord<Last>& w) {
  return w.empty() ? std::string("ε") : w.letters();
}

// --- Dyck language over {a, b} -------------------------------------------

// Every prefix has #a ≥ #b and the whole word has #a = #b.
bool is_dyck(const BalancedWord& w);

// Maximum prefix value of #a − #b. Throws std::invalid_argument on non-Dyck input.
std::size_t height(const BalancedWord& w);

// Splits at every return of the prefix sum to zero. Throws on non-Dyck input.
Factorization<BalancedWord> irreducible_factors(const BalancedWord& w);

// Number of irreducible factors. Throws on non-Dyck input.
std::size_t omega(const BalancedWord& w);

// --- Hooley-Dyck language over {a, b, c} ---------------------------------

// Reading a = +1, b = −1, c = 0: the path never goes below zero, ends at zero,
// and every c is taken at height ≥ 1.
bool is_hooley_dyck(const TriWord& w);

// Normal form under ab → ε, acb → ab, cc → c, always rewriting the leftmost
// redex. A word is Hooley-Dyck iff its normal form is empty.
TriWord reduce_hooley(const TriWord& w);

// Splits at every return of the a/b prefix sum to zero. Throws on non-members.
Factorization<TriWord> hooley_irreducible_factors(const TriWord& w);

// Number of irreducible Hooley-Dyck factors. Throws on non-members.
std::size_t theta(const TriWord& w);

// Height of the Schröder path. Throws on non-members.
std::size_t height(const TriWord& w);

// Erases every c.
BalancedWord gamma(const TriWord& w);

// Replaces every c by ab.
BalancedWord alpha(const TriWord& w);

}  // namespace dyckdiv
