#pragma once

#include <set>
#include <utility>

#include "pomcoh/space.hpp"

namespace pomcoh {

// The trace of a linear morphism: a set of input/output token pairs which,
// read as tokens of source -o target, must form a clique there.
struct LinearTrace {
  Space source;
  Space target;
  std::set<std::pair<Token, Token>> pairs;

  friend bool operator==(const LinearTrace&, const LinearTrace&) = default;
};

// Validates webs on construction; linearity itself is is_linear_trace.
LinearTrace make_trace(Space source, Space target,
                       std::set<std::pair<Token, Token>> pairs);

bool is_linear_trace(const LinearTrace& t);

// Image of a clique: { beta | exists alpha in x with (alpha,beta) in t }.
TokenSet trace_apply(const LinearTrace& t, const TokenSet& x);

// Relational composition; throws std::invalid_argument when the middle
// spaces differ.
LinearTrace trace_compose(const LinearTrace& first, const LinearTrace& second);

LinearTrace identity_trace(const Space& a);

// Swaps source and target; the inverse of an isomorphism trace.
LinearTrace transpose(const LinearTrace& t);

// Canonical morphisms of the before connective.
LinearTrace before_assoc_iso(const Space& a, const Space& b, const Space& c);
LinearTrace tensor_to_before(const Space& a, const Space& b);
LinearTrace before_to_par(const Space& a, const Space& b);

}  // namespace pomcoh
