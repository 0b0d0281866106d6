#include <doctest.h>

#include <vector>

#include "kronperm/permutation.hpp"

namespace kp = kronperm;

TEST_CASE("only bijections are accepted") {
  CHECK_THROWS_AS(kp::Permutation({0, 0}), kp::DimensionError);
  CHECK_THROWS_AS(kp::Permutation({0, 2}), kp::DimensionError);
  CHECK_THROWS_AS(kp::Permutation({-1, 0}), kp::DimensionError);
  CHECK_THROWS_AS(kp::Permutation(std::vector<kp::Index>{}), kp::DimensionError);
  CHECK_NOTHROW(kp::Permutation({2, 0, 1}));
}

TEST_CASE("one-based views round trip") {
  const std::vector<kp::Index> oneBased{2, 3, 1};
  const auto p = kp::Permutation::fromOneBased(oneBased);
  CHECK(p.images() == std::vector<kp::Index>{1, 2, 0});
  CHECK(p.toOneBased() == oneBased);
  CHECK_THROWS_AS(kp::Permutation::fromOneBased(std::vector<kp::Index>{0, 1}),
                  kp::DimensionError);
}

TEST_CASE("inverse and chaining") {
  const kp::Permutation p({1, 2, 0});  // sigma(0)=1, sigma(1)=2, sigma(2)=0
  const auto inv = p.inverse();
  CHECK(inv.images() == std::vector<kp::Index>{2, 0, 1});
  CHECK(p.then(inv).isIdentity());
  CHECK(inv.then(p).isIdentity());

  const kp::Permutation q({2, 1, 0});
  // (p.then(q))(i) = q(p(i))
  CHECK(p.then(q).images() == std::vector<kp::Index>{1, 0, 2});
  CHECK_THROWS_AS(p.then(kp::Permutation({1, 0})), kp::DimensionError);
}

TEST_CASE("identity") {
  CHECK(kp::Permutation::identity(1).isIdentity());
  CHECK(kp::Permutation::identity(4).images() == std::vector<kp::Index>{0, 1, 2, 3});
  CHECK_FALSE(kp::Permutation({1, 0}).isIdentity());
}
