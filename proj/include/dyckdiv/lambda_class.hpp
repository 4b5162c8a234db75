#pragma once

#include "dyckdiv/positive_set.hpp"
#include "dyckdiv/rational.hpp"
#include "dyckdiv/words.hpp"

namespace dyckdiv {

// Reads the increasing symmetric difference S △ λS, writing a for elements of
// S and b for elements of λS. Throws std::invalid_argument unless λ > 1.
BalancedWord lambda_class(const PositiveSet& set, const Rational& lambda);

// Reads the increasing union S ∪ λS, writing a for S \ λS, b for λS \ S and
// c for S ∩ λS. Throws unless λ > 1.
TriWord hooley_class(const PositiveSet& set, const Rational& lambda);

// True iff S and λS are disjoint. Throws unless λ > 1.
bool is_regular(const PositiveSet& set, const Rational& lambda);

// alpha(hooley_class(S, λ)): the λ-class for every λ' slightly above λ, i.e.
// for all λ < λ' < next_singular_above(S, λ).
BalancedWord right_limit_class(const PositiveSet& set, const Rational& lambda);

struct ClassWordBundle {
  PositiveSet set;
  Rational lambda;
  BalancedWord class_word;
  TriWord hooley_word;
  bool regular = true;
};

ClassWordBundle make_class_bundle(const PositiveSet& set, const Rational& lambda);

}  // namespace dyckdiv
