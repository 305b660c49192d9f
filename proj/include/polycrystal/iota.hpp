#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polycrystal/cartan.hpp"

namespace polycrystal {

// Periodic index sequence iota = (..., i_k, ..., i_2, i_1) with i_k = period[(k-1) mod m].
//
// Positions are 1-based and counted from the right: position 1 is the first
// operator applied. `period` is stored in position order (period[0] = i_1).
class IotaSequence {
 public:
  // Throws InvalidIota when an index is outside I, an index of I never occurs,
  // or two cyclically adjacent entries coincide. A period of length 1 is accepted
  // for rank-1 data; satisfies_no_repeat() then reports false.
  IotaSequence(CartanData cartan, std::vector<int> period);

  // Parses the display form "3,2,1": the leftmost entry is applied last, so the
  // rightmost entry becomes i_1.
  static IotaSequence parse(CartanData cartan, const std::string& display);
  // (n, ..., 2, 1) repeated: the sequence used for every built-in family.
  static IotaSequence standard(CartanData cartan);

  const CartanData& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  int period_length() const { return static_cast<int>(period_.size()); }
  const std::vector<int>& period() const { return period_; }

  // i_k for k >= 1.
  int at(Int k) const { return period_[static_cast<std::size_t>((k - 1) % period_length())]; }
  Int k_plus(Int k) const;
  // 0 when k is the first occurrence of i_k.
  Int k_minus(Int k) const;
  // iota^(i): first position carrying index i.
  Int first(int i) const;
  // Largest k_plus(k) - k over all k.
  Int max_gap() const;

  bool satisfies_no_repeat() const { return no_repeat_; }
  std::string display() const;

  bool operator==(const IotaSequence& o) const { return period_ == o.period_ && cartan_ == o.cartan_; }

 private:
  CartanData cartan_;
  std::vector<int> period_;
  std::vector<Int> first_;    // first_[i-1] = iota^(i)
  std::vector<Int> gap_;      // gap_[r] = k_plus(k) - k for k = r + 1
  bool no_repeat_ = true;
};

inline Int k_plus(const IotaSequence& s, Int k) { return s.k_plus(k); }
inline Int k_minus(const IotaSequence& s, Int k) { return s.k_minus(k); }
inline Int iota_first(const IotaSequence& s, int i) { return s.first(i); }

}  // namespace polycrystal
