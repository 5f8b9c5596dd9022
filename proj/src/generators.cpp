#include "tn/generators.hpp"

#include <cstdlib>

#include "tn/error.hpp"

namespace tn {

namespace {

MarkedAutomorphism from_images(int rank, std::vector<FreeWord> images,
                               std::vector<RecipeStep> recipe) {
  MarkedAutomorphism a;
  a.rank = rank;
  a.images = std::move(images);
  a.recipe = std::move(recipe);
  return a;
}

std::vector<FreeWord> identity_images(int rank) {
  std::vector<FreeWord> im;
  im.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) im.push_back(FreeWord::generator(rank, i));
  return im;
}

}  // namespace

MarkedAutomorphism magnus_K(int rank, int i, int k) {
  require(rank >= 2, ErrorKind::invalid_input, "K[i,k] needs rank >= 2");
  require(i >= 1 && i <= rank && k >= 1 && k <= rank && i != k,
          ErrorKind::invalid_input, "bad indices for K[i,k]");
  auto im = identity_images(rank);
  im[static_cast<std::size_t>(i) - 1] =
      FreeWord::generator(rank, k).conjugate(FreeWord::generator(rank, i));
  return from_images(rank, std::move(im),
                     {{GeneratorName{GenKind::k2, i, k, 0}, 1}});
}

MarkedAutomorphism magnus_K3(int rank, int i, int k, int l) {
  require(rank >= 3, ErrorKind::invalid_input, "K[i,k,l] needs rank >= 3");
  require(i >= 1 && i <= rank && k >= 1 && k <= rank && l >= 1 && l <= rank,
          ErrorKind::invalid_input, "bad indices for K[i,k,l]");
  require(i != k && i != l && k != l, ErrorKind::invalid_input,
          "indices of K[i,k,l] must be pairwise distinct");
  auto im = identity_images(rank);
  im[static_cast<std::size_t>(i) - 1] =
      FreeWord::generator(rank, i) *
      FreeWord::commutator(FreeWord::generator(rank, k),
                           FreeWord::generator(rank, l));
  return from_images(rank, std::move(im),
                     {{GeneratorName{GenKind::k3, i, k, l}, 1}});
}

MarkedAutomorphism out_delta12(int rank) {
  require(rank >= 2, ErrorKind::invalid_input, "delta12 needs rank >= 2");
  auto im = identity_images(rank);
  im[0] = FreeWord::generator(rank, 1) * FreeWord::generator(rank, 2);
  return from_images(rank, std::move(im),
                     {{GeneratorName{GenKind::delta12, 0, 0, 0}, 1}});
}

MarkedAutomorphism out_omega1(int rank) {
  require(rank >= 1, ErrorKind::invalid_input, "omega1 needs rank >= 1");
  auto im = identity_images(rank);
  im[0] = FreeWord::generator(rank, 1, -1);
  return from_images(rank, std::move(im),
                     {{GeneratorName{GenKind::omega1, 0, 0, 0}, 1}});
}

MarkedAutomorphism out_pi(int rank, int i) {
  require(i >= 1 && i + 1 <= rank, ErrorKind::invalid_input,
          "pi(i) needs 1 <= i < rank");
  auto im = identity_images(rank);
  std::swap(im[static_cast<std::size_t>(i) - 1], im[static_cast<std::size_t>(i)]);
  return from_images(rank, std::move(im),
                     {{GeneratorName{GenKind::pi, i, 0, 0}, 1}});
}

MarkedAutomorphism build_generator(int rank, const GeneratorName& name, int exp) {
  require(exp == 1 || exp == -1, ErrorKind::invalid_input,
          "recipe exponent must be +-1");
  switch (name.kind) {
    case GenKind::k2: {
      if (exp == 1) return magnus_K(rank, name.i, name.k);
      // Inverse conjugates by x_k^{-1}.
      auto im = identity_images(rank);
      im[static_cast<std::size_t>(name.i) - 1] =
          FreeWord::generator(rank, name.k, -1)
              .conjugate(FreeWord::generator(rank, name.i));
      return from_images(rank, std::move(im),
                         {{GeneratorName{GenKind::k2, name.i, name.k, 0}, -1}});
    }
    case GenKind::k3: {
      if (exp == 1) return magnus_K3(rank, name.i, name.k, name.l);
      // K[i,k,l]^{-1} = K[i,l,k]
      MarkedAutomorphism a = magnus_K3(rank, name.i, name.l, name.k);
      a.recipe = {{GeneratorName{GenKind::k3, name.i, name.k, name.l}, -1}};
      return a;
    }
    case GenKind::delta12: {
      if (exp == 1) return out_delta12(rank);
      auto im = identity_images(rank);
      im[0] = FreeWord::generator(rank, 1) * FreeWord::generator(rank, 2, -1);
      return from_images(rank, std::move(im),
                         {{GeneratorName{GenKind::delta12, 0, 0, 0}, -1}});
    }
    case GenKind::omega1:
      return out_omega1(rank);  // involution
    case GenKind::pi:
      return out_pi(rank, name.i);  // involution
  }
  fail(ErrorKind::internal, "unreachable generator kind");
}

MarkedAutomorphism evaluate_recipe(int rank, const std::vector<RecipeStep>& recipe) {
  MarkedAutomorphism cur = identity_automorphism(rank);
  for (const RecipeStep& s : recipe)
    cur = compose(build_generator(rank, s.gen, s.exp), cur);
  cur.recipe = recipe;
  return cur;
}

MarkedAutomorphism invert(const MarkedAutomorphism& phi) {
  require(phi.recipe.has_value(), ErrorKind::unsupported,
          "cannot invert an automorphism without a recipe");
  std::vector<RecipeStep> rev;
  rev.reserve(phi.recipe->size());
  for (auto it = phi.recipe->rbegin(); it != phi.recipe->rend(); ++it)
    rev.push_back({it->gen, -it->exp});
  return evaluate_recipe(phi.rank, rev);
}

bool torelli_membership(const MarkedAutomorphism& phi) {
  return abelianize(phi) == IntMatrix::identity(phi.rank);
}

bool verify_appendix_identity(int l, int n) {
  require(n >= 3 && l >= 3 && l <= n, ErrorKind::invalid_input,
          "need 3 <= l <= n");
  MarkedAutomorphism d = out_delta12(n);
  MarkedAutomorphism lhs = product({d, magnus_K3(n, 2, l, 1), invert(d)});
  MarkedAutomorphism rhs = product({
      magnus_K(n, l, 2),
      invert(magnus_K(n, l, 1)),
      magnus_K(n, 1, l),
      magnus_K(n, l, 1),
      magnus_K3(n, 2, l, 1),
      magnus_K3(n, 1, 2, l),
      invert(magnus_K(n, l, 2)),
      invert(magnus_K(n, 2, l)),
  });
  return out_equal(lhs, rhs);
}

bool verify_conjugation_formula(int n, int i, int k, int l,
                                const std::vector<int>& h) {
  require(n >= 3, ErrorKind::invalid_input, "needs rank >= 3");
  require(i != k && i != l && k != l, ErrorKind::invalid_input,
          "indices must be pairwise distinct");
  for (int c : h)
    require(c >= 1 && c <= n && c != i, ErrorKind::invalid_input,
            "conjugator letters must avoid i");

  FreeWord hw(n);
  for (int c : h) hw.append_letter(c);

  // Direct form: x_i -> x_i [h x_k h^{-1}, h x_l h^{-1}].
  MarkedAutomorphism direct = identity_automorphism(n);
  direct.recipe.reset();
  direct.images[static_cast<std::size_t>(i) - 1] =
      FreeWord::generator(n, i) *
      FreeWord::commutator(hw.conjugate(FreeWord::generator(n, k)),
                           hw.conjugate(FreeWord::generator(n, l)));

  // P conjugates every x_j (j != i) by h; built letter by letter with the
  // last letter of h acting first.
  std::vector<MarkedAutomorphism> pf;
  for (auto it = h.rbegin(); it != h.rend(); ++it)
    for (int j = 1; j <= n; ++j)
      if (j != i && j != *it) pf.push_back(magnus_K(n, j, *it));
  MarkedAutomorphism P = pf.empty() ? identity_automorphism(n) : product(pf);
  MarkedAutomorphism expr = product({invert(P), magnus_K3(n, i, k, l), P});
  return out_equal(direct, expr);
}

MarkedAutomorphism g_subgroup_element(int rank, const std::vector<long long>& p,
                                      const std::vector<long long>& q) {
  require(rank >= 3, ErrorKind::invalid_input, "needs rank >= 3");
  require(p.size() == static_cast<std::size_t>(rank - 2) &&
              q.size() == static_cast<std::size_t>(rank - 2),
          ErrorKind::invalid_input, "need rank-2 exponent pairs");
  FreeWord comm = FreeWord::commutator(FreeWord::generator(rank, 1),
                                       FreeWord::generator(rank, 2));
  MarkedAutomorphism out = identity_automorphism(rank);
  std::vector<RecipeStep> recipe;
  for (int j = 3; j <= rank; ++j) {
    long long pj = p[static_cast<std::size_t>(j) - 3];
    long long qj = q[static_cast<std::size_t>(j) - 3];
    out.images[static_cast<std::size_t>(j) - 1] =
        comm.pow(pj) * FreeWord::generator(rank, j) * comm.pow(qj);
    // x_j -> x_j [x1,x2]^{p+q}, then conjugate x_j by [x1,x2]^{p}.
    long long s = pj + qj;
    for (long long t = 0; t < std::llabs(s); ++t)
      recipe.push_back({GeneratorName{GenKind::k3, j, s > 0 ? 1 : 2, s > 0 ? 2 : 1}, 1});
    FreeWord conj = comm.pow(pj);
    for (int letter : conj.letters()) {
      recipe.push_back({GeneratorName{GenKind::k2, j, std::abs(letter), 0},
                        letter > 0 ? 1 : -1});
    }
  }
  MarkedAutomorphism check = evaluate_recipe(rank, recipe);
  require(check.images == out.images, ErrorKind::internal,
          "recipe disagrees with direct images");
  out.recipe = std::move(recipe);
  return out;
}

}  // namespace tn
