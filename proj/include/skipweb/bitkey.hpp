#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skipweb {

// Fixed-length bit string, most-significant bit first.  Point coordinates are
// dyadic fractions of the bounding cube side: bit i halves the cell at depth
// i.  Lengths beyond 64 bits are supported so that adversarially deep
// compressed quadtrees (depth proportional to n) stay exact.
class BitKey {
 public:
  BitKey() = default;
  BitKey(std::uint32_t nbits, std::uint64_t low_value) : nbits_(nbits), words_((nbits + 63) / 64, 0) {
    // low_value occupies the least significant end of the key.
    if (!words_.empty()) {
      std::uint32_t spare = static_cast<std::uint32_t>(words_.size() * 64 - nbits);
      std::uint64_t v = low_value;
      if (spare > 0 && spare < 64) v <<= spare;
      words_.back() = v;
    }
  }

  static BitKey zeros(std::uint32_t nbits) { return BitKey(nbits, 0); }

  static BitKey from_words(std::uint32_t nbits, std::vector<std::uint64_t> words) {
    BitKey k;
    k.nbits_ = nbits;
    k.words_ = std::move(words);
    k.words_.resize((nbits + 63) / 64, 0);
    std::uint32_t spare = static_cast<std::uint32_t>(k.words_.size() * 64 - nbits);
    if (spare > 0 && !k.words_.empty()) k.words_.back() &= ~std::uint64_t{0} << spare;
    return k;
  }

  std::uint32_t size() const { return nbits_; }

  int bit(std::uint32_t i) const {
    return static_cast<int>((words_[i / 64] >> (63 - (i % 64))) & 1u);
  }

  void set_bit(std::uint32_t i, int v) {
    std::uint64_t mask = std::uint64_t{1} << (63 - (i % 64));
    if (v)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }

  // Index of the first bit where the keys differ; nbits if equal.
  std::uint32_t first_diff(const BitKey& o) const {
    std::uint32_t nw = static_cast<std::uint32_t>(words_.size());
    for (std::uint32_t w = 0; w < nw; ++w) {
      std::uint64_t x = words_[w] ^ o.words_[w];
      if (x != 0) {
        std::uint32_t d = w * 64 + static_cast<std::uint32_t>(__builtin_clzll(x));
        return d < nbits_ ? d : nbits_;
      }
    }
    return nbits_;
  }

  bool prefix_equals(const BitKey& o, std::uint32_t len) const {
    return first_diff(o) >= len;
  }

  bool operator==(const BitKey& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
  bool operator<(const BitKey& o) const {
    std::uint32_t d = first_diff(o);
    if (d >= nbits_) return false;
    return bit(d) < o.bit(d);
  }

  std::string to_string() const {
    std::string s(nbits_, '0');
    for (std::uint32_t i = 0; i < nbits_; ++i)
      if (bit(i)) s[i] = '1';
    return s;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::uint32_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace skipweb
