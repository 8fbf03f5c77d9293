#include <catch_amalgamated.hpp>

#include "globop/globular.hpp"
#include "globop/tree.hpp"

using namespace globop;

namespace {
GCell cell(std::string id, int dim, std::string src = "", std::string tgt = "") {
  return {std::move(id), dim, std::move(src), std::move(tgt)};
}
}  // namespace

TEST_CASE("validate: small valid sets") {
  CHECK_NOTHROW(validate_globular_set({cell("a", 0)}, 0));
  CHECK_NOTHROW(validate_globular_set(
      {cell("a", 0), cell("b", 0), cell("f", 1, "a", "b")}, 1));
}

TEST_CASE("validate: named violations") {
  CHECK_THROWS_AS(
      validate_globular_set({cell("f", 1, "a", "b")}, 1), MissingReference);
  CHECK_THROWS_AS(
      validate_globular_set({cell("a", 0), cell("f", 1, "a", "a"),
                             cell("e", 2, "f", "a")},
                            2),
      DimensionMismatch);
  // a 2-cell whose src and tgt 1-cells have different endpoints
  CHECK_THROWS_AS(
      validate_globular_set({cell("a", 0), cell("b", 0), cell("c", 0),
                             cell("f", 1, "a", "b"), cell("g", 1, "a", "c"),
                             cell("e", 2, "f", "g")},
                            2),
      GlobularIdentityViolation);
}

TEST_CASE("iterated boundary") {
  GlobularSet X = validate_globular_set(
      {cell("a", 0), cell("b", 0), cell("f", 1, "a", "b"),
       cell("g", 1, "a", "b"), cell("e", 2, "f", "g")},
      2);
  CHECK(iterated_boundary(X, X.at("e"), 2, Side::source).id == "e");
  CHECK(iterated_boundary(X, X.at("e"), 0, Side::source).id == "a");
  CHECK(iterated_boundary(X, X.at("f"), 0, Side::target).id == "b");
  CHECK_THROWS_AS(iterated_boundary(X, X.at("f"), 2, Side::source),
                  DimensionMismatch);
  // stepwise equals composite for every cell and level
  for (const auto& c : X.cells)
    for (int k = 0; k <= c.dim; ++k) {
      const GCell* cur = &c;
      while (cur->dim > k) cur = &X.at(cur->src);
      CHECK(iterated_boundary(X, c, k, Side::source).id == cur->id);
    }
}

TEST_CASE("parallelism") {
  GlobularSet X = validate_globular_set(
      {cell("a", 0), cell("b", 0), cell("f", 1, "a", "b"),
       cell("g", 1, "a", "b"), cell("h", 1, "b", "a")},
      1);
  CHECK(is_parallel(X, X.at("f"), X.at("g")));
  CHECK_FALSE(is_parallel(X, X.at("f"), X.at("h")));
  CHECK_THROWS_AS(is_parallel(X, X.at("a"), X.at("a")), DimensionMismatch);
  // equivalence relation on each fiber
  auto ids = {"f", "g", "h"};
  for (auto i : ids) {
    CHECK(is_parallel(X, X.at(i), X.at(i)));
    for (auto j : ids) {
      CHECK(is_parallel(X, X.at(i), X.at(j)) == is_parallel(X, X.at(j), X.at(i)));
      for (auto k : ids)
        if (is_parallel(X, X.at(i), X.at(j)) && is_parallel(X, X.at(j), X.at(k)))
          CHECK(is_parallel(X, X.at(i), X.at(k)));
    }
  }
}
