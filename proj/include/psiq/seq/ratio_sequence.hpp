#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psiq/algebra/scalar.hpp"
#include "psiq/errors.hpp"

namespace psiq {

enum class SequenceKind { kBeta, kB, kC, kD, kAlpha, kPsiValue };

std::string to_string(SequenceKind kind);

// Indexed values v[start], v[start + stride], ... An iterator that divides by
// zero records the first index it could not produce in `truncated_at`.
template <class S>
struct RatioSequence {
  SequenceKind kind = SequenceKind::kBeta;
  int start = 0;
  int stride = 1;
  std::vector<S> values;
  std::string provenance;
  std::optional<int> truncated_at;
  std::string truncation_reason;

  int last_index() const { return start + stride * (static_cast<int>(values.size()) - 1); }
  bool has(int index) const {
    if (values.empty() || index < start || index > last_index()) return false;
    return (index - start) % stride == 0;
  }
  const S& at(int index) const {
    if (!has(index)) throw DomainError("sequence index " + std::to_string(index) + " out of range");
    return values[static_cast<std::size_t>((index - start) / stride)];
  }
  void push(S value) { values.push_back(std::move(value)); }
};

}  // namespace psiq
