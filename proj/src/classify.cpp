#include "lefschetz/classify.hpp"

#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

HilbertSequence::HilbertSequence(std::vector<Integer> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 1) throw DomainError("Hilbert sequence must start with h_0 = 1");
  for (const auto& v : values_) {
    if (v < 0) throw DomainError("Hilbert sequence entries must be nonnegative");
  }
  while (values_.size() > 1 && values_.back() == 0) values_.pop_back();
}

HilbertSequence HilbertSequence::from_counts(const std::vector<std::size_t>& counts) {
  std::vector<Integer> v;
  v.reserve(counts.size());
  for (std::size_t c : counts) v.emplace_back(static_cast<unsigned long>(c));
  return HilbertSequence(std::move(v));
}

Integer HilbertSequence::operator[](std::size_t k) const { return k < values_.size() ? values_[k] : Integer(0); }

std::string HilbertSequence::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < values_.size(); ++k) out << (k ? "," : "") << values_[k].get_str();
  return out.str();
}

bool is_o_sequence(const HilbertSequence& h) {
  // Growth of 0 is 0, so interior zeros are rejected here too.
  for (std::size_t i = 1; i + 1 <= h.socle_degree(); ++i) {
    if (h[i + 1] > macaulay_growth(h[i], static_cast<unsigned>(i))) return false;
  }
  return true;
}

std::size_t t_index(const HilbertSequence& h) {
  for (std::size_t t = 1;; ++t) {
    if (h[t] <= t) return t;
  }
}

namespace {

bool lower_chain_holds(const HilbertSequence& h, std::size_t t) {
  for (std::size_t i = 1; i < t; ++i) {
    if (h[i - 1] != macaulay_lower(h[i], static_cast<unsigned>(i))) return false;
  }
  return true;
}

void require_admissible(const HilbertSequence& h) {
  if (!is_o_sequence(h)) throw InadmissibleSequence("(" + h.to_string() + ") is not an O-sequence");
}

}  // namespace

bool forces_wlp(const HilbertSequence& h) {
  require_admissible(h);
  return lower_chain_holds(h, t_index(h));
}

bool forces_slp(const HilbertSequence& h) {
  require_admissible(h);
  const Integer n = h[1];
  if (n <= 2) return true;
  const std::size_t t = t_index(h);
  return h[t] <= 2 && lower_chain_holds(h, t);
}

}  // namespace lefschetz
