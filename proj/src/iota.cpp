#include "polycrystal/iota.hpp"

#include <algorithm>
#include <sstream>

namespace polycrystal {

IotaSequence::IotaSequence(CartanData cartan, std::vector<int> period)
    : cartan_(std::move(cartan)), period_(std::move(period)) {
  const int m = period_length();
  if (m == 0) throw InvalidIota("iota period must be nonempty");
  for (int v : period_)
    if (!cartan_.contains(v)) throw InvalidIota("iota entry " + std::to_string(v) + " is not in I");

  first_.assign(rank(), 0);
  for (int p = 0; p < m; ++p)
    if (first_[period_[p] - 1] == 0) first_[period_[p] - 1] = p + 1;
  for (int i = 1; i <= rank(); ++i)
    if (first_[i - 1] == 0) throw InvalidIota("index " + std::to_string(i) + " never occurs in iota");

  if (m == 1) {
    // i_k = i_{k+1} for every k; only meaningful for rank 1.
    if (rank() != 1) throw InvalidIota("a period of length 1 needs rank 1");
    no_repeat_ = false;
  } else {
    for (int p = 0; p < m; ++p)
      if (period_[p] == period_[(p + 1) % m])
        throw InvalidIota("iota repeats index " + std::to_string(period_[p]) + " at positions " +
                          std::to_string(p + 1) + "," + std::to_string(p + 2));
  }

  gap_.assign(m, 0);
  for (int p = 0; p < m; ++p) {
    int d = 1;
    while (period_[(p + d) % m] != period_[p]) ++d;
    gap_[p] = d;
  }
}

IotaSequence IotaSequence::parse(CartanData cartan, const std::string& display) {
  std::vector<int> items;
  std::stringstream ss(display);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      items.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidIota("bad iota entry: " + item);
    }
  }
  std::reverse(items.begin(), items.end());
  return IotaSequence(std::move(cartan), std::move(items));
}

IotaSequence IotaSequence::standard(CartanData cartan) {
  std::vector<int> p(cartan.rank());
  for (int i = 0; i < cartan.rank(); ++i) p[i] = i + 1;
  return IotaSequence(std::move(cartan), std::move(p));
}

Int IotaSequence::k_plus(Int k) const {
  if (k < 1) throw IndexOutOfRange("iota positions start at 1");
  return k + gap_[static_cast<std::size_t>((k - 1) % period_length())];
}

Int IotaSequence::k_minus(Int k) const {
  if (k < 1) throw IndexOutOfRange("iota positions start at 1");
  if (k == first(at(k))) return 0;
  // the predecessor of k is the unique l with k_plus(l) = k; scan back one period
  for (Int l = k - 1; l >= 1 && l >= k - period_length(); --l)
    if (at(l) == at(k)) return l;
  return 0;
}

Int IotaSequence::first(int i) const {
  cartan_.check_index(i);
  return first_[i - 1];
}

Int IotaSequence::max_gap() const { return *std::max_element(gap_.begin(), gap_.end()); }

std::string IotaSequence::display() const {
  std::string out;
  for (auto it = period_.rbegin(); it != period_.rend(); ++it) {
    if (!out.empty()) out += ",";
    out += std::to_string(*it);
  }
  return out;
}

}  // namespace polycrystal
