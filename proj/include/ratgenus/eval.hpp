#ifndef RATGENUS_EVAL_HPP
#define RATGENUS_EVAL_HPP

#include <optional>

#include "ratgenus/genus_value.hpp"
#include "ratgenus/knot_spec.hpp"

namespace ratgenus {

struct GenusResult {
  GenusValue value;
  TrivialityStatus triviality = TrivialityStatus::unknown();
  // Order of the knot class in first homology, when it can be tracked
  // structurally.
  std::optional<std::int64_t> order;
};

// Folds a knot construction into the tightest certified genus interval the
// implemented formulas give, together with a structurally derived triviality
// status and class order. Pure and total on well-formed specs: unsupported
// combinations throw UnsupportedComposition (or UnknownTriviality for a
// connected sum whose case cannot be selected), never guess.
GenusResult eval_spec(const KnotSpec& spec);

inline GenusResult eval_spec(const KnotSpecPtr& spec) {
  if (!spec) throw std::invalid_argument("eval_spec: null spec");
  return eval_spec(*spec);
}

}  // namespace ratgenus

#endif  // RATGENUS_EVAL_HPP
