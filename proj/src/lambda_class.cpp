#include "dyckdiv/lambda_class.hpp"

#include <algorithm>

namespace dyckdiv {

BalancedWord lambda_class(const PositiveSet& set, const Rational& lambda) {
  BalancedWord word;
  for (const auto& [value, tag] : tagged_merge(set, lambda)) {
    if (tag == Membership::SOnly)
      word.push_back('a');
    else if (tag == Membership::LambdaOnly)
      word.push_back('b');
  }
  return word;
}

TriWord hooley_class(const PositiveSet& set, const Rational& lambda) {
  TriWord word;
  for (const auto& [value, tag] : tagged_merge(set, lambda)) {
    switch (tag) {
      case Membership::SOnly: word.push_back('a'); break;
      case Membership::LambdaOnly: word.push_back('b'); break;
      case Membership::Both: word.push_back('c'); break;
    }
  }
  return word;
}

bool is_regular(const PositiveSet& set, const Rational& lambda) {
  const auto merged = tagged_merge(set, lambda);
  return std::none_of(merged.begin(), merged.end(),
                      [](const TaggedValue& t) { return t.tag == Membership::Both; });
}

BalancedWord right_limit_class(const PositiveSet& set, const Rational& lambda) {
  return alpha(hooley_class(set, lambda));
}

ClassWordBundle make_class_bundle(const PositiveSet& set, const Rational& lambda) {
  ClassWordBundle bundle{set, lambda, {}, hooley_class(set, lambda), true};
  bundle.class_word = gamma(bundle.hooley_word);
  bundle.regular = std::find(bundle.hooley_word.begin(), bundle.hooley_word.end(), 'c') == bundle.hooley_word.end();
  return bundle;
}

}  // namespace dyckdiv
