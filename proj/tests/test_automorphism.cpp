#include <doctest.h>

#include "tn/automorphism.hpp"
#include "tn/error.hpp"
#include "tn/generators.hpp"

using namespace tn;

namespace {

FreeWord parse(int rank, const char* text) { return FreeWord::parse(rank, text); }

}  // namespace

TEST_CASE("named generators act as documented") {
  MarkedAutomorphism k = magnus_K(3, 1, 2);  // x1 -> x2 x1 x2^-1
  CHECK(apply(k, parse(3, "x1")) == parse(3, "x2 x1 x2^-1"));
  CHECK(apply(k, parse(3, "x2")) == parse(3, "x2"));
  CHECK(apply(k, parse(3, "x3")) == parse(3, "x3"));

  MarkedAutomorphism k3 = magnus_K3(3, 1, 2, 3);  // x1 -> x1 [x2, x3]
  CHECK(apply(k3, parse(3, "x1")) == parse(3, "x1 x2 x3 x2^-1 x3^-1"));

  MarkedAutomorphism d = out_delta12(3);
  CHECK(apply(d, parse(3, "x1")) == parse(3, "x1 x2"));
  MarkedAutomorphism w = out_omega1(3);
  CHECK(apply(w, parse(3, "x1")) == parse(3, "x1^-1"));
  MarkedAutomorphism p = out_pi(3, 2);
  CHECK(apply(p, parse(3, "x2")) == parse(3, "x3"));
  CHECK(apply(p, parse(3, "x3")) == parse(3, "x2"));
}

TEST_CASE("composition applies the right factor first") {
  MarkedAutomorphism d = out_delta12(2);   // x1 -> x1 x2
  MarkedAutomorphism w = out_omega1(2);    // x1 -> x1^-1
  // (d o w)(x1) = d(x1^-1) = (x1 x2)^-1
  CHECK(apply(compose(d, w), parse(2, "x1")) == parse(2, "x2^-1 x1^-1"));
  // (w o d)(x1) = w(x1 x2) = x1^-1 x2
  CHECK(apply(compose(w, d), parse(2, "x1")) == parse(2, "x1^-1 x2"));
  // product lists the first-acting factor first
  CHECK(product({d, w}).images == compose(w, d).images);
}

TEST_CASE("recipes invert exactly") {
  MarkedAutomorphism phi =
      product({magnus_K(4, 1, 3), magnus_K3(4, 2, 3, 4), out_delta12(4),
               out_pi(4, 1), magnus_K3(4, 3, 4, 1)});
  MarkedAutomorphism inv = invert(phi);
  CHECK(compose(inv, phi).is_identity_on_images());
  CHECK(compose(phi, inv).is_identity_on_images());
  MarkedAutomorphism bare = phi;
  bare.recipe.reset();
  CHECK_THROWS_AS(invert(bare), Error);
}

TEST_CASE("three-index moves invert by swapping the last two indices") {
  CHECK(compose(magnus_K3(3, 1, 2, 3), magnus_K3(3, 1, 3, 2))
            .is_identity_on_images());
  CHECK(compose(magnus_K3(4, 2, 4, 1), magnus_K3(4, 2, 1, 4))
            .is_identity_on_images());
}

TEST_CASE("squared conjugation move conjugates by the square") {
  MarkedAutomorphism k = magnus_K(3, 1, 2);
  CHECK(apply(compose(k, k), parse(3, "x1")) ==
        parse(3, "x2 x2 x1 x2^-1 x2^-1"));
}

TEST_CASE("abelianization reverses composition order") {
  MarkedAutomorphism d = out_delta12(3);
  MarkedAutomorphism p = out_pi(3, 2);
  CHECK(abelianize(compose(d, p)) == abelianize(p) * abelianize(d));
  IntMatrix m = abelianize(d);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(1, 0) == 0);
}

TEST_CASE("inner witnesses are found and used for outer equality") {
  FreeWord g = parse(3, "x1 x2^-1");
  MarkedAutomorphism inner = inner_automorphism(3, g);
  auto witness = is_inner(inner);
  REQUIRE(witness.has_value());
  CHECK(*witness == g);
  CHECK(!is_inner(out_delta12(3)).has_value());
  CHECK(!is_inner(magnus_K(3, 1, 2)).has_value());  // inner only on x1

  // K[1,2] agrees with conjugation-by-x2 on x1 but differs in Aut; in Out
  // the conjugation move on a single generator is not inner unless trivial.
  MarkedAutomorphism k = magnus_K(3, 1, 2);
  CHECK(out_equal(k, k));
  CHECK(!out_equal(k, identity_automorphism(3)));
  // Conjugating everything by the same word is trivial in Out.
  CHECK(out_equal(inner, identity_automorphism(3)));
}

TEST_CASE("swap-and-flip conjugate of the transvection is its inverse") {
  int n = 3;
  MarkedAutomorphism s = product({out_pi(n, 1), out_omega1(n), out_pi(n, 1)});
  MarkedAutomorphism lhs = product({invert(s), out_delta12(n), s});
  // delta12^-1 via recipe inversion
  MarkedAutomorphism rhs = invert(out_delta12(n));
  CHECK(lhs.images == rhs.images);
}

TEST_CASE("identity recognition") {
  CHECK(identity_automorphism(4).is_identity_on_images());
  CHECK(!out_delta12(4).is_identity_on_images());
  CHECK(evaluate_recipe(3, {}).is_identity_on_images());
}
