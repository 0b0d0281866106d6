#include <doctest.h>

#include <utility>
#include <vector>

#include "kronperm/kron.hpp"
#include "kronperm/rng.hpp"
#include "kronperm/tpm.hpp"

namespace kp = kronperm;

namespace {

const kp::Matrixi kSwap22{{1, 0, 0, 0},  //
                          {0, 0, 1, 0},
                          {0, 1, 0, 0},
                          {0, 0, 0, 1}};

kp::ColVector<std::int64_t> unitVector(kp::Index n, kp::Index hot) {
  kp::ColVector<std::int64_t> e = kp::ColVector<std::int64_t>::Zero(n);
  e(hot) = 1;
  return e;
}

kp::Matrixi randomInt(kp::Rng& rng, kp::Index rows, kp::Index cols) {
  kp::Matrixi m(rows, cols);
  for (kp::Index i = 0; i < rows; ++i) {
    for (kp::Index j = 0; j < cols; ++j) m(i, j) = rng.uniformInt(-9, 9);
  }
  return m;
}

kp::TpmSpec randomSpec(kp::Rng& rng, kp::Index maxK = 4, kp::Index maxDim = 4) {
  const kp::Index k = rng.uniformIndex(maxK) + 1;
  std::vector<kp::Index> dims(static_cast<std::size_t>(k));
  for (auto& d : dims) d = rng.uniformIndex(maxDim) + 1;
  return kp::TpmSpec(rng.permutation(k), kp::MixedRadix(std::move(dims)));
}

}  // namespace

TEST_CASE("identity spec compiles to the identity map") {
  const kp::ImplicitTpm u(kp::TpmSpec(kp::Permutation::identity(2), kp::MixedRadix({2, 3})));
  const std::vector<kp::Index> want{0, 1, 2, 3, 4, 5};
  CHECK(std::vector<kp::Index>(u.dest().begin(), u.dest().end()) == want);
}

TEST_CASE("the two-factor swap on dims (2,2) sends columns 0,1,2,3 to rows 0,2,1,3") {
  const kp::ImplicitTpm u(kp::tcm(2, 2));
  const std::vector<kp::Index> want{0, 2, 1, 3};
  CHECK(std::vector<kp::Index>(u.dest().begin(), u.dest().end()) == want);
}

TEST_CASE("a 3-cycle on dims (2,2,2) obeys the basis rule on all 8 basis products") {
  // sigma as 1-based images (2,3,1): position j of the output takes factor sigma(j)
  const auto sigma = kp::Permutation::fromOneBased(std::vector<kp::Index>{2, 3, 1});
  const kp::ImplicitTpm u(kp::TpmSpec(sigma, kp::MixedRadix({2, 2, 2})));
  for (kp::Index i1 = 0; i1 < 2; ++i1) {
    for (kp::Index i2 = 0; i2 < 2; ++i2) {
      for (kp::Index i3 = 0; i3 < 2; ++i3) {
        const auto basis = kp::kron(kp::kron(unitVector(2, i1), unitVector(2, i2)),
                                    unitVector(2, i3));
        const auto permuted = kp::kron(kp::kron(unitVector(2, i2), unitVector(2, i3)),
                                       unitVector(2, i1));
        CHECK(kp::exactlyEqual(u.apply(basis), permuted));
      }
    }
  }
}

TEST_CASE("explicit swap (2,2) reproduces the 4x4 commutation matrix") {
  const kp::SparseTpm u(kp::tcm(2, 2));
  CHECK(kp::exactlyEqual(u.toDense<std::int64_t>(), kSwap22));
  CHECK(kp::verifyTpm(u, kp::tcm(2, 2)));
}

TEST_CASE("explicit identity spec is the identity matrix") {
  const kp::SparseTpm u(kp::TpmSpec(kp::Permutation::identity(3), kp::MixedRadix({2, 3, 2})));
  CHECK(kp::exactlyEqual(u.toDense<std::int64_t>(), kp::Matrixi::Identity(12, 12)));
}

TEST_CASE("materialization cap is enforced") {
  CHECK_THROWS_AS(kp::SparseTpm(kp::tcm(32, 32), 1000), kp::DimensionError);
  CHECK_NOTHROW(kp::SparseTpm(kp::tcm(32, 32), 1024));
}

TEST_CASE("applying the swap permutes a plain vector") {
  const kp::ImplicitTpm ident(
      kp::TpmSpec(kp::Permutation::identity(2), kp::MixedRadix({2, 2})));
  const kp::Vectori v{{1, 2, 3, 4}};
  CHECK(kp::exactlyEqual(ident.apply(v), v));

  const kp::ImplicitTpm swap(kp::tcm(2, 2));
  const kp::Vectori want{{1, 3, 2, 4}};
  CHECK(kp::exactlyEqual(swap.apply(v), want));
  // agrees with the dense product
  CHECK(kp::exactlyEqual(kp::Matrixi(kSwap22 * v), want));

  CHECK_THROWS_AS(swap.apply(kp::Vectori{{1, 2, 3}}), kp::DimensionError);
}

TEST_CASE("the swap turns alpha (x) beta into beta (x) alpha") {
  const kp::Vectori alpha{{1, 2}};
  const kp::Vectori beta{{5, 7}};
  const kp::Vectori input{{5, 7, 10, 14}};    // alpha (x) beta
  const kp::Vectori want{{5, 10, 7, 14}};     // beta (x) alpha
  CHECK(kp::exactlyEqual(kp::kron(alpha, beta), input));
  CHECK(kp::exactlyEqual(kp::kron(beta, alpha), want));
  CHECK(kp::exactlyEqual(kp::ImplicitTpm(kp::tcm(2, 2)).apply(input), want));
}

TEST_CASE("column-vector rule holds for random factors, exactly for integers") {
  kp::Rng rng(21);
  for (int round = 0; round < 30; ++round) {
    const auto spec = randomSpec(rng, 4, 3);
    const kp::Index k = spec.sigma().size();
    std::vector<kp::ColVector<std::int64_t>> factors;
    for (kp::Index j = 0; j < k; ++j) {
      kp::ColVector<std::int64_t> v(spec.dims().dim(j));
      for (kp::Index i = 0; i < v.rows(); ++i) v(i) = rng.uniformInt(-9, 9);
      factors.push_back(std::move(v));
    }
    kp::ColVector<std::int64_t> product = factors[0];
    for (kp::Index j = 1; j < k; ++j) product = kp::kron(product, factors[static_cast<std::size_t>(j)]);
    kp::ColVector<std::int64_t> permuted =
        factors[static_cast<std::size_t>(spec.sigma()(0))];
    for (kp::Index j = 1; j < k; ++j) {
      permuted = kp::kron(permuted, factors[static_cast<std::size_t>(spec.sigma()(j))]);
    }
    CHECK(kp::exactlyEqual(kp::ImplicitTpm(spec).apply(product), permuted));
  }
}

TEST_CASE("column-vector rule holds for float factors within 1e-12 relative") {
  kp::Rng rng(22);
  for (int round = 0; round < 20; ++round) {
    const auto spec = randomSpec(rng, 4, 3);
    const kp::Index k = spec.sigma().size();
    std::vector<kp::Vectord> factors;
    for (kp::Index j = 0; j < k; ++j) {
      kp::Vectord v(spec.dims().dim(j));
      for (kp::Index i = 0; i < v.rows(); ++i) {
        v(i) = static_cast<double>(rng.uniformInt(-999, 999)) / 313.0;
      }
      factors.push_back(std::move(v));
    }
    kp::Vectord product = factors[0];
    for (kp::Index j = 1; j < k; ++j) product = kp::kron(product, factors[static_cast<std::size_t>(j)]);
    kp::Vectord permuted = factors[static_cast<std::size_t>(spec.sigma()(0))];
    for (kp::Index j = 1; j < k; ++j) {
      permuted = kp::kron(permuted, factors[static_cast<std::size_t>(spec.sigma()(j))]);
    }
    const kp::Vectord got = kp::ImplicitTpm(spec).apply(product);
    for (kp::Index i = 0; i < got.rows(); ++i) {
      CHECK(std::abs(got(i) - permuted(i)) <= 1e-12 * (1 + std::abs(permuted(i))));
    }
  }
}

TEST_CASE("transposing a spec inverts the permutation and permutes the extents") {
  const auto identity = kp::TpmSpec(kp::Permutation::identity(2), kp::MixedRadix({3, 4}));
  CHECK(identity.transposed() == identity);

  CHECK(kp::tcm(3, 5).transposed() == kp::tcm(5, 3));

  const auto cycle = kp::TpmSpec(kp::Permutation::fromOneBased(std::vector<kp::Index>{2, 3, 1}),
                                 kp::MixedRadix({2, 3, 4}));
  const auto t = cycle.transposed();
  CHECK(t.sigma().toOneBased() == std::vector<kp::Index>{3, 1, 2});
  CHECK(t.dims().dims() == std::vector<kp::Index>{3, 4, 2});
}

TEST_CASE("the explicit matrix of the transposed spec is the transposed matrix") {
  kp::Rng rng(23);
  const auto cycle = kp::TpmSpec(kp::Permutation::fromOneBased(std::vector<kp::Index>{2, 3, 1}),
                                 kp::MixedRadix({2, 3, 4}));
  const kp::Matrixi dense = kp::SparseTpm(cycle).toDense<std::int64_t>();
  const kp::Matrixi denseT = kp::SparseTpm(cycle.transposed()).toDense<std::int64_t>();
  CHECK(kp::exactlyEqual(denseT, kp::Matrixi(dense.transpose())));

  for (int round = 0; round < 40; ++round) {
    const auto spec = randomSpec(rng);
    const kp::Matrixi u = kp::SparseTpm(spec).toDense<std::int64_t>();
    const kp::Matrixi ut = kp::SparseTpm(spec.transposed()).toDense<std::int64_t>();
    CHECK(kp::exactlyEqual(ut, kp::Matrixi(u.transpose())));
    // transpose equals inverse
    CHECK(kp::exactlyEqual(kp::Matrixi(u * ut), kp::Matrixi::Identity(u.rows(), u.rows())));
  }
}

TEST_CASE("every explicit matrix is orthogonal with one 1 per row and column") {
  kp::Rng rng(24);
  for (int round = 0; round < 60; ++round) {
    const auto spec = randomSpec(rng);
    const kp::Matrixi u = kp::SparseTpm(spec).toDense<std::int64_t>();
    const kp::Index n = u.rows();
    CHECK(kp::exactlyEqual(kp::Matrixi(u.transpose() * u), kp::Matrixi::Identity(n, n)));
    CHECK(kp::exactlyEqual(kp::Matrixi(u * u.transpose()), kp::Matrixi::Identity(n, n)));
    for (kp::Index i = 0; i < n; ++i) {
      CHECK(u.row(i).sum() == 1);
      CHECK(u.col(i).sum() == 1);
      CHECK(u.row(i).maxCoeff() == 1);
      if (n > 1) CHECK(u.row(i).minCoeff() == 0);
    }
  }
}

TEST_CASE("compose chains specs the way the explicit matrices multiply") {
  const auto id22 = kp::TpmSpec(kp::Permutation::identity(2), kp::MixedRadix({2, 2}));
  CHECK(kp::compose(id22, id22) == id22);

  // swap then swap back is the identity
  const auto inner = kp::tcm(2, 3);
  const auto outer = kp::tcm(3, 2);
  const auto roundTrip = kp::compose(outer, inner);
  CHECK(kp::exactlyEqual(kp::SparseTpm(roundTrip).toDense<std::int64_t>(),
                         kp::Matrixi::Identity(6, 6)));

  // exhaustive over all permutation pairs on dims (2,3,4): the composed
  // spec's matrix equals the product of the explicit matrices
  std::vector<std::vector<kp::Index>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const kp::MixedRadix base({2, 3, 4});
  for (const auto& si : perms) {
    for (const auto& so : perms) {
      const kp::TpmSpec innerSpec(kp::Permutation(si), base);
      const kp::TpmSpec outerSpec(kp::Permutation(so), innerSpec.permutedDims());
      const auto composed = kp::compose(outerSpec, innerSpec);
      const kp::Matrixi product =
          kp::SparseTpm(outerSpec).toDense<std::int64_t>() *
          kp::SparseTpm(innerSpec).toDense<std::int64_t>();
      CHECK(kp::exactlyEqual(kp::SparseTpm(composed).toDense<std::int64_t>(), product));
      CHECK(kp::verifyTpm(product, composed));
    }
  }

  // the image list that survives the brute force: j -> inner(outer(j))
  const kp::TpmSpec innerSpec(kp::Permutation({1, 2, 0}), base);
  const kp::TpmSpec outerSpec(kp::Permutation({1, 0, 2}), innerSpec.permutedDims());
  CHECK(kp::compose(outerSpec, innerSpec).sigma().images() == std::vector<kp::Index>{2, 1, 0});

  CHECK_THROWS_AS(kp::compose(innerSpec, innerSpec), kp::DimensionError);
}

TEST_CASE("permuted Kronecker product by conjugation") {
  const kp::Matrixi a{{1, 2}, {3, 4}};
  const kp::Matrixi b{{5}, {6}};  // 2x1
  const kp::Matrixi want{{5, 10}, {15, 20}, {6, 12}, {18, 24}};  // b (x) a
  const auto swapped =
      kp::permuteKronProduct<std::int64_t>(kp::Permutation({1, 0}), {a, b});
  CHECK(kp::exactlyEqual(swapped, want));

  // identity permutation leaves the product alone
  const auto same = kp::permuteKronProduct<std::int64_t>(kp::Permutation::identity(2), {a, b});
  CHECK(kp::exactlyEqual(same, kp::kron(a, b)));

  CHECK_THROWS_AS(kp::permuteKronProduct<std::int64_t>(kp::Permutation({1, 0}), {a}),
                  kp::DimensionError);
}

TEST_CASE("a 3-cycle on mixed rectangular shapes, exactly") {
  kp::Rng rng(30);
  const auto sigma = kp::Permutation::fromOneBased(std::vector<kp::Index>{2, 3, 1});
  for (int round = 0; round < 10; ++round) {
    const kp::Matrixi a = randomInt(rng, 2, 1);
    const kp::Matrixi b = randomInt(rng, 1, 3);
    const kp::Matrixi c = randomInt(rng, 2, 2);
    const auto got = kp::permuteKronProduct<std::int64_t>(sigma, {a, b, c});
    CHECK(kp::exactlyEqual(got, kp::kronMany<std::int64_t>({b, c, a})));
  }
}

TEST_CASE("permuted product matches the direct product for random factor lists") {
  kp::Rng rng(25);
  for (int round = 0; round < 40; ++round) {
    const kp::Index k = rng.uniformIndex(4) + 1;
    const auto sigma = rng.permutation(k);
    std::vector<kp::Matrixi> ms;
    for (kp::Index j = 0; j < k; ++j) {
      ms.push_back(randomInt(rng, rng.uniformIndex(3) + 1, rng.uniformIndex(3) + 1));
    }
    std::vector<kp::Matrixi> permuted;
    for (kp::Index j = 0; j < k; ++j) permuted.push_back(ms[static_cast<std::size_t>(sigma(j))]);
    CHECK(kp::exactlyEqual(kp::permuteKronProduct(sigma, ms), kp::kronMany(permuted)));
  }
}

TEST_CASE("verifyTpm accepts the canonical matrix and rejects others") {
  CHECK(kp::verifyTpm(kSwap22, kp::tcm(2, 2)));
  CHECK_FALSE(kp::verifyTpm(kp::Matrixi::Identity(4, 4), kp::tcm(2, 2)));
  CHECK_THROWS_AS(kp::verifyTpm(kp::Matrixi::Identity(3, 3), kp::tcm(2, 2)),
                  kp::DimensionError);

  kp::Rng rng(26);
  for (int round = 0; round < 30; ++round) {
    const auto spec = randomSpec(rng, 3, 3);
    CHECK(kp::verifyTpm(kp::SparseTpm(spec), spec));
    CHECK(kp::verifyTpm(kp::SparseTpm(spec).toDense<std::int64_t>(), spec));
  }
}

TEST_CASE("tcm collapses to the identity when one factor is one-dimensional") {
  for (kp::Index p = 1; p <= 5; ++p) {
    CHECK(kp::exactlyEqual(kp::SparseTpm(kp::tcm(1, p)).toDense<std::int64_t>(),
                           kp::Matrixi::Identity(p, p)));
    CHECK(kp::exactlyEqual(kp::SparseTpm(kp::tcm(p, 1)).toDense<std::int64_t>(),
                           kp::Matrixi::Identity(p, p)));
  }
}

TEST_CASE("a single factor admits only the identity") {
  const kp::TpmSpec spec(kp::Permutation::identity(1), kp::MixedRadix({7}));
  CHECK(kp::exactlyEqual(kp::SparseTpm(spec).toDense<std::int64_t>(),
                         kp::Matrixi::Identity(7, 7)));
}

TEST_CASE("swapping the factors of vec(X) gives vec of the transpose") {
  kp::Rng rng(27);
  for (kp::Index n = 1; n <= 6; ++n) {
    for (kp::Index p = 1; p <= 6; ++p) {
      kp::Matrixd x(n, p);
      for (kp::Index i = 0; i < n; ++i) {
        for (kp::Index j = 0; j < p; ++j) {
          x(i, j) = static_cast<double>(rng.uniformInt(-9999, 9999)) / 101.0;
        }
      }
      const kp::Vectord lhs = kp::ImplicitTpm(kp::tcm(n, p)).apply(kp::vecRow(x));
      const kp::Vectord rhs = kp::vecRow(kp::Matrixd(x.transpose()));
      CHECK(kp::exactlyEqual(lhs, rhs));
    }
  }
}

TEST_CASE("a product of chain-compatible explicit matrices is itself of the same kind") {
  kp::Rng rng(28);
  for (int round = 0; round < 20; ++round) {
    const auto inner = randomSpec(rng, 3, 3);
    const kp::TpmSpec outer(rng.permutation(inner.sigma().size()), inner.permutedDims());
    const kp::Matrixi product = kp::SparseTpm(outer).toDense<std::int64_t>() *
                                kp::SparseTpm(inner).toDense<std::int64_t>();
    CHECK(kp::verifyTpm(product, kp::compose(outer, inner)));
  }
}

TEST_CASE("implicit application agrees with the dense product on random vectors") {
  kp::Rng rng(29);
  for (int round = 0; round < 30; ++round) {
    const auto spec = randomSpec(rng);
    const kp::ImplicitTpm u(spec);
    const kp::Matrixi dense = kp::SparseTpm(spec).toDense<std::int64_t>();
    kp::Vectori v(spec.size());
    for (kp::Index i = 0; i < v.rows(); ++i) v(i) = rng.uniformInt(-9, 9);
    CHECK(kp::exactlyEqual(u.apply(v), kp::Vectori(dense * v)));
  }
}
