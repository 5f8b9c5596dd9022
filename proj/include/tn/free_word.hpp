#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tn {

// Freely reduced word in a free group of a given rank. Letters are signed
// generator indices: +i stands for x_i, -i for its inverse (1-based).
// All constructors and operations keep the letter sequence freely reduced.
class FreeWord {
 public:
  FreeWord() : rank_(0) {}
  explicit FreeWord(int rank) : rank_(rank) {}
  FreeWord(int rank, std::vector<int> letters);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;
  // this * w * this^{-1}
  FreeWord conjugate(const FreeWord& w) const;

  bool operator==(const FreeWord& rhs) const = default;

  // Exponent sum of each generator, length == rank.
  std::vector<long long> exponent_vector() const;

  // Space-separated generator tokens, e.g. "x1 x2^-1 x1"; empty word -> "".
  std::string str() const;
  static FreeWord parse(int rank, const std::string& text);

  static FreeWord generator(int rank, int index, int sign = +1);
  static FreeWord commutator(const FreeWord& a, const FreeWord& b);
  FreeWord pow(long long e) const;

  void append_letter(int letter);

 private:
  int rank_;
  std::vector<int> letters_;
};

}  // namespace tn
