#include "tn/automorphism.hpp"

#include <cstdlib>
#include <sstream>

#include "tn/error.hpp"

namespace tn {

std::string GeneratorName::str() const {
  std::ostringstream os;
  switch (kind) {
    case GenKind::k2: os << "K[" << i << "," << k << "]"; break;
    case GenKind::k3: os << "K[" << i << "," << k << "," << l << "]"; break;
    case GenKind::delta12: os << "delta12"; break;
    case GenKind::omega1: os << "omega1"; break;
    case GenKind::pi: os << "pi" << i; break;
  }
  return os.str();
}

bool MarkedAutomorphism::is_identity_on_images() const {
  for (int i = 1; i <= rank; ++i) {
    const FreeWord& w = images[static_cast<std::size_t>(i) - 1];
    if (w.length() != 1 || w.letters()[0] != i) return false;
  }
  return true;
}

std::string MarkedAutomorphism::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rank; ++i) {
    if (i) os << ", ";
    os << images[static_cast<std::size_t>(i)].str();
  }
  os << ']';
  return os.str();
}

MarkedAutomorphism identity_automorphism(int rank) {
  MarkedAutomorphism a;
  a.rank = rank;
  for (int i = 1; i <= rank; ++i) a.images.push_back(FreeWord::generator(rank, i));
  a.recipe = std::vector<RecipeStep>{};
  return a;
}

FreeWord apply(const MarkedAutomorphism& phi, const FreeWord& w) {
  require(phi.rank == w.rank(), ErrorKind::invalid_input,
          "rank mismatch in apply");
  FreeWord out(phi.rank);
  for (int l : w.letters()) {
    const FreeWord& img = phi.images[static_cast<std::size_t>(std::abs(l)) - 1];
    if (l > 0) {
      for (int m : img.letters()) out.append_letter(m);
    } else {
      const auto& ls = img.letters();
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.append_letter(-*it);
    }
  }
  return out;
}

MarkedAutomorphism compose(const MarkedAutomorphism& phi,
                           const MarkedAutomorphism& psi) {
  require(phi.rank == psi.rank, ErrorKind::invalid_input,
          "rank mismatch in compose");
  MarkedAutomorphism out;
  out.rank = phi.rank;
  out.images.reserve(static_cast<std::size_t>(out.rank));
  for (const FreeWord& w : psi.images) out.images.push_back(apply(phi, w));
  if (phi.recipe && psi.recipe) {
    std::vector<RecipeStep> r = *psi.recipe;
    r.insert(r.end(), phi.recipe->begin(), phi.recipe->end());
    out.recipe = std::move(r);
  }
  return out;
}

MarkedAutomorphism product(const std::vector<MarkedAutomorphism>& factors) {
  require(!factors.empty(), ErrorKind::invalid_input, "empty product");
  MarkedAutomorphism out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = compose(factors[i], out);
  return out;
}

IntMatrix abelianize(const MarkedAutomorphism& phi) {
  IntMatrix m(phi.rank, phi.rank);
  for (int j = 0; j < phi.rank; ++j) {
    auto e = phi.images[static_cast<std::size_t>(j)].exponent_vector();
    for (int k = 0; k < phi.rank; ++k) m.at(j, k) = e[static_cast<std::size_t>(k)];
  }
  return m;
}

MarkedAutomorphism inner_automorphism(int rank, const FreeWord& w) {
  require(rank == w.rank(), ErrorKind::invalid_input,
          "rank mismatch in inner_automorphism");
  MarkedAutomorphism out;
  out.rank = rank;
  for (int i = 1; i <= rank; ++i)
    out.images.push_back(w.conjugate(FreeWord::generator(rank, i)));
  // Conjugation by a single letter x_k moves every generator; as a recipe it
  // is the product of the k2 moves K[j,k] over j != k. Conjugating by a word
  // chains these letter conjugations, last letter acting first.
  std::vector<RecipeStep> recipe;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    int k = std::abs(*it), sgn = *it > 0 ? 1 : -1;
    for (int j = 1; j <= rank; ++j) {
      if (j == k) continue;
      recipe.push_back({GeneratorName{GenKind::k2, j, k, 0}, sgn});
    }
  }
  out.recipe = std::move(recipe);
  return out;
}

std::optional<FreeWord> is_inner(const MarkedAutomorphism& phi) {
  int n = phi.rank;
  require(n >= 1, ErrorKind::invalid_input, "rank must be positive");
  const FreeWord& c = phi.images[0];
  // A reduced conjugate of x_1 reads u x_1 u^{-1} with u not ending in x_1^-+1;
  // in particular it has odd length and x_1 as its middle letter.
  if (c.length() % 2 == 0) return std::nullopt;
  std::size_t m = (c.length() - 1) / 2;
  if (c.letters()[m] != 1) return std::nullopt;
  FreeWord u(n);
  for (std::size_t i = 0; i < m; ++i) u.append_letter(c.letters()[i]);
  for (std::size_t i = 0; i < m; ++i)
    if (c.letters()[m + 1 + i] != -c.letters()[m - 1 - i]) return std::nullopt;
  // The x_1 constraint pins the witness to u x_1^k. Images bound |k|.
  std::size_t maxlen = 0;
  for (const auto& w : phi.images) maxlen = std::max(maxlen, w.length());
  long long bound = static_cast<long long>(maxlen) + 1;
  const FreeWord x1 = FreeWord::generator(n, 1);
  for (long long a = 0; a <= bound; ++a) {
    for (int sgn : {+1, -1}) {
      if (a == 0 && sgn < 0) continue;
      FreeWord g = u * x1.pow(sgn * a);
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i)
        ok = phi.images[static_cast<std::size_t>(i) - 1] ==
             g.conjugate(FreeWord::generator(n, i));
      if (ok) return g;
    }
  }
  return std::nullopt;
}

bool out_equal(const MarkedAutomorphism& phi, const MarkedAutomorphism& psi) {
  require(phi.rank == psi.rank, ErrorKind::invalid_input,
          "rank mismatch in out_equal");
  return is_inner(compose(phi, invert(psi))).has_value();
}

}  // namespace tn
