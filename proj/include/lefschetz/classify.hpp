#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lefschetz/combinatorics.hpp"

namespace lefschetz {

/// h_0, h_1, ..., h_e of an artinian graded algebra; trailing zeros are dropped.
class HilbertSequence {
 public:
  /// Throws DomainError unless h_0 = 1 and every entry is nonnegative.
  explicit HilbertSequence(std::vector<Integer> values);
  static HilbertSequence from_counts(const std::vector<std::size_t>& counts);

  /// h_k, zero past the socle degree.
  Integer operator[](std::size_t k) const;
  std::size_t socle_degree() const noexcept { return values_.size() - 1; }
  const std::vector<Integer>& values() const noexcept { return values_; }
  std::string to_string() const;

 private:
  std::vector<Integer> values_;
};

/// h_{i+1} <= (h_i)^{<i>} for every i >= 1.
bool is_o_sequence(const HilbertSequence& h);

/// Smallest t >= 1 with h_t <= t.
std::size_t t_index(const HilbertSequence& h);

/// Every artinian algebra with this Hilbert function has the WLP. Throws
/// InadmissibleSequence for sequences that are not O-sequences.
bool forces_wlp(const HilbertSequence& h);

/// Every artinian algebra with this Hilbert function has the SLP.
bool forces_slp(const HilbertSequence& h);

}  // namespace lefschetz
