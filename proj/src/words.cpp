#include "dyckdiv/words.hpp"

#include <algorithm>
#include <string>

namespace dyckdiv {

namespace {

int step(char letter) {
  switch (letter) {
    case 'a': return 1;
    case 'b': return -1;
    default: return 0;
  }
}

template <char Last>
void require(bool member, const BasicWord<Last>& w, const char* language) {
  if (!member)
    throw std::invalid_argument("'" + w.letters() + "' is not a " + language + " word");
}

// Cuts w after each position where the running height returns to zero.
template <char Last>
Factorization<BasicWord<Last>> split_at_returns(const BasicWord<Last>& w) {
  Factorization<BasicWord<Last>> out;
  long level = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    level += step(w[i]);
    if (level == 0) {
      out.factors.emplace_back(std::string_view(w.letters()).substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return out;
}

std::size_t max_level(std::string_view letters) {
  long level = 0, peak = 0;
  for (char ch : letters) {
    level += step(ch);
    peak = std::max(peak, level);
  }
  return static_cast<std::size_t>(peak);
}

}  // namespace

bool is_dyck(const BalancedWord& w) {
  long level = 0;
  for (char ch : w) {
    level += step(ch);
    if (level < 0) return false;
  }
  return level == 0;
}

std::size_t height(const BalancedWord& w) {
  require(is_dyck(w), w, "Dyck");
  return max_level(w.letters());
}

Factorization<BalancedWord> irreducible_factors(const BalancedWord& w) {
  require(is_dyck(w), w, "Dyck");
  return split_at_returns(w);
}

std::size_t omega(const BalancedWord& w) {
  require(is_dyck(w), w, "Dyck");
  long level = 0;
  std::size_t returns = 0;
  for (char ch : w) {
    level += step(ch);
    if (level == 0) ++returns;
  }
  return returns;
}

bool is_hooley_dyck(const TriWord& w) {
  long level = 0;
  for (char ch : w) {
    if (ch == 'c' && level < 1) return false;
    level += step(ch);
    if (level < 0) return false;
  }
  return level == 0;
}

TriWord reduce_hooley(const TriWord& w) {
  std::string s = w.letters();
  for (;;) {
    bool rewrote = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == 'a' && s[i + 1] == 'b') {
        s.erase(i, 2);
      } else if (s[i] == 'a' && s[i + 1] == 'c' && i + 2 < s.size() && s[i + 2] == 'b') {
        s.erase(i + 1, 1);
      } else if (s[i] == 'c' && s[i + 1] == 'c') {
        s.erase(i, 1);
      } else {
        continue;
      }
      rewrote = true;
      break;
    }
    if (!rewrote) return TriWord(s);
  }
}

Factorization<TriWord> hooley_irreducible_factors(const TriWord& w) {
  require(is_hooley_dyck(w), w, "Hooley-Dyck");
  return split_at_returns(w);
}

std::size_t theta(const TriWord& w) { return hooley_irreducible_factors(w).size(); }

std::size_t height(const TriWord& w) {
  require(is_hooley_dyck(w), w, "Hooley-Dyck");
  return max_level(w.letters());
}

BalancedWord gamma(const TriWord& w) {
  std::string out;
  out.reserve(w.size());
  for (char ch : w)
    if (ch != 'c') out.push_back(ch);
  return BalancedWord(out);
}

BalancedWord alpha(const TriWord& w) {
  std::string out;
  out.reserve(2 * w.size());
  for (char ch : w) {
    if (ch == 'c')
      out += "ab";
    else
      out.push_back(ch);
  }
  return BalancedWord(out);
}

}  // namespace dyckdiv
