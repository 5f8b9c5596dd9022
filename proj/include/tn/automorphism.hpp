#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tn/free_word.hpp"
#include "tn/int_matrix.hpp"

namespace tn {

// Named building blocks for automorphisms of the free group F_n:
//   k2       : x_i -> x_k x_i x_k^{-1}                      (indices i, k)
//   k3       : x_i -> x_i [x_k, x_l]                        (indices i, k, l)
//   delta12  : x_1 -> x_1 x_2
//   omega1   : x_1 -> x_1^{-1}
//   pi       : swap x_i and x_{i+1}                         (index i)
enum class GenKind { k2, k3, delta12, omega1, pi };

struct GeneratorName {
  GenKind kind;
  int i = 0, k = 0, l = 0;
  bool operator==(const GeneratorName&) const = default;
  std::string str() const;
};

// One step of a construction recipe: a named generator raised to +-1.
// A recipe [s1, s2, ..., sm] is evaluated by applying s1 first, then s2,
// and so on; as a function it is eval(sm) o ... o eval(s1).
struct RecipeStep {
  GeneratorName gen;
  int exp = 1;
  bool operator==(const RecipeStep&) const = default;
};

// Automorphism of F_n recorded by its images of the generators, optionally
// together with the recipe it was built from. Recipes make exact inversion
// possible; automorphisms given by raw images can still be applied, composed
// and abelianized.
struct MarkedAutomorphism {
  int rank = 0;
  std::vector<FreeWord> images;              // images[i-1] = image of x_i
  std::optional<std::vector<RecipeStep>> recipe;

  bool is_identity_on_images() const;
  std::string str() const;
};

MarkedAutomorphism identity_automorphism(int rank);

// Substitute images into w, freely reducing as it goes.
FreeWord apply(const MarkedAutomorphism& phi, const FreeWord& w);

// compose(phi, psi) = phi o psi (psi acts first). Recipes concatenate.
MarkedAutomorphism compose(const MarkedAutomorphism& phi,
                           const MarkedAutomorphism& psi);

// Product of a list in application order: the first element acts first.
MarkedAutomorphism product(const std::vector<MarkedAutomorphism>& factors);

// Exact inverse, available only when a recipe is present.
MarkedAutomorphism invert(const MarkedAutomorphism& phi);

// Build the automorphism a recipe denotes.
MarkedAutomorphism evaluate_recipe(int rank, const std::vector<RecipeStep>& recipe);

// Single named generator (exp in {+1, -1}).
MarkedAutomorphism build_generator(int rank, const GeneratorName& name, int exp);

// Matrix with entry (j, k) = exponent sum of x_k in phi(x_j). This makes
// abelianize(compose(phi, psi)) == abelianize(psi) * abelianize(phi).
IntMatrix abelianize(const MarkedAutomorphism& phi);

// Conjugation by w on every generator: x_i -> w x_i w^{-1}.
MarkedAutomorphism inner_automorphism(int rank, const FreeWord& w);

// Witness g with phi(x_i) = g x_i g^{-1} for all i, if one exists.
std::optional<FreeWord> is_inner(const MarkedAutomorphism& phi);

// Equality in the outer automorphism group: phi o psi^{-1} inner.
bool out_equal(const MarkedAutomorphism& phi, const MarkedAutomorphism& psi);

}  // namespace tn
