#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallai {

// Unsigned arbitrary-precision integer. Base 2^32 limbs, little endian,
// no leading zero limbs (zero is the empty limb vector). Supports exactly
// the operations the theorem checks need: multiply, power, compare, and
// decimal rendering. Comparisons between chromatic products and n^e must
// be exact because the bounds are attained with equality on the tight
// instances; doubles would misreport those.
class Natural {
 public:
  Natural() = default;

  Natural(std::uint64_t value) {  // NOLINT: implicit by design
    while (value != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(value));
      value >>= 32;
    }
  }

  static Natural pow(std::uint64_t base, std::uint64_t exponent) {
    Natural result{1};
    Natural b{base};
    while (exponent != 0) {
      if (exponent & 1) result *= b;
      b *= b;
      exponent >>= 1;
    }
    return result;
  }

  bool is_zero() const { return limbs_.empty(); }

  Natural& operator*=(const Natural& rhs) {
    if (is_zero() || rhs.is_zero()) {
      limbs_.clear();
      return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
        std::uint64_t acc = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                            out[i + j] + carry;
        out[i + j] = static_cast<std::uint32_t>(acc);
        carry = acc >> 32;
      }
      std::size_t pos = i + rhs.limbs_.size();
      while (carry != 0) {
        std::uint64_t acc = out[pos] + carry;
        out[pos] = static_cast<std::uint32_t>(acc);
        carry = acc >> 32;
        ++pos;
      }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    limbs_ = std::move(out);
    return *this;
  }

  friend Natural operator*(Natural lhs, const Natural& rhs) {
    lhs *= rhs;
    return lhs;
  }

  int compare(const Natural& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
      return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const Natural& a, const Natural& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Natural& a, const Natural& b) { return a.compare(b) != 0; }
  friend bool operator<(const Natural& a, const Natural& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Natural& a, const Natural& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Natural& a, const Natural& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Natural& a, const Natural& b) { return a.compare(b) >= 0; }

  // Decimal string, no separators.
  std::string str() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
      // divide by 1e9 in place, most significant limb first
      std::uint64_t remainder = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t acc = (remainder << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(acc / 1'000'000'000);
        remainder = acc % 1'000'000'000;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      for (int digit = 0; digit < 9; ++digit) {
        out.push_back(static_cast<char>('0' + remainder % 10));
        remainder /= 10;
        if (work.empty() && remainder == 0) break;
      }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    return {out.rbegin(), out.rend()};
  }

 private:
  std::vector<std::uint32_t> limbs_;
};

// Exact binomial coefficient in 64 bits; the palette cap (64 colors) keeps
// every value we form well inside the representable range.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace gallai
