#include "tn/free_word.hpp"

#include <cstdlib>
#include <sstream>

#include "tn/error.hpp"

namespace tn {

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank) {
  require(rank >= 0, ErrorKind::invalid_input, "negative rank");
  letters_.reserve(letters.size());
  for (int l : letters) append_letter(l);
}

void FreeWord::append_letter(int letter) {
  require(letter != 0 && std::abs(letter) <= rank_, ErrorKind::invalid_input,
          "letter index out of range");
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(-*it);
  return out;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  require(rank_ == rhs.rank_, ErrorKind::invalid_input,
          "rank mismatch in word product");
  FreeWord out = *this;
  for (int l : rhs.letters_) out.append_letter(l);
  return out;
}

FreeWord FreeWord::conjugate(const FreeWord& w) const {
  return *this * w * inverse();
}

std::vector<long long> FreeWord::exponent_vector() const {
  std::vector<long long> e(static_cast<std::size_t>(rank_), 0);
  for (int l : letters_) e[static_cast<std::size_t>(std::abs(l)) - 1] += (l > 0 ? 1 : -1);
  return e;
}

std::string FreeWord::str() const {
  std::ostringstream os;
  bool first = true;
  for (int l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << std::abs(l);
    if (l < 0) os << "^-1";
  }
  return os.str();
}

FreeWord FreeWord::parse(int rank, const std::string& text) {
  FreeWord out(rank);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    require(tok.size() >= 2 && tok[0] == 'x', ErrorKind::invalid_input,
            "bad word token: " + tok);
    std::size_t pos = 1;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    require(pos > 1, ErrorKind::invalid_input, "bad word token: " + tok);
    int idx = std::stoi(tok.substr(1, pos - 1));
    long long exp = 1;
    if (pos < tok.size()) {
      require(tok[pos] == '^', ErrorKind::invalid_input, "bad word token: " + tok);
      try {
        exp = std::stoll(tok.substr(pos + 1));
      } catch (const std::exception&) {
        fail(ErrorKind::invalid_input, "bad exponent in token: " + tok);
      }
    }
    require(idx >= 1 && idx <= rank, ErrorKind::invalid_input,
            "generator index out of range: " + tok);
    for (long long i = 0; i < std::llabs(exp); ++i)
      out.append_letter(exp > 0 ? idx : -idx);
  }
  return out;
}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  require(index >= 1 && index <= rank, ErrorKind::invalid_input,
          "generator index out of range");
  require(sign == 1 || sign == -1, ErrorKind::invalid_input, "sign must be +-1");
  FreeWord w(rank);
  w.append_letter(sign * index);
  return w;
}

FreeWord FreeWord::commutator(const FreeWord& a, const FreeWord& b) {
  return a * b * a.inverse() * b.inverse();
}

FreeWord FreeWord::pow(long long e) const {
  FreeWord base = e >= 0 ? *this : inverse();
  FreeWord out(rank_);
  for (long long i = 0; i < std::llabs(e); ++i) out = out * base;
  return out;
}

}  // namespace tn
