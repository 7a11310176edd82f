// Copyright 2026 The pomlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Shared fixtures and independent reference computations for the tests.
#ifndef POMLAB_TESTS_TEST_SUPPORT_H_
#define POMLAB_TESTS_TEST_SUPPORT_H_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pomlab/classical.h"
#include "pomlab/hermitian.h"
#include "pomlab/hvmodel.h"
#include "pomlab/qubit.h"

namespace pomlab::testing {

inline BlochVector RandomBloch(std::mt19937_64& rng, double max_norm = 1.0) {
  std::normal_distribution<double> g;
  BlochVector v{g(rng), g(rng), g(rng)};
  const double r = max_norm * std::cbrt(std::uniform_real_distribution<double>(0, 1)(rng));
  return v * (r / v.Norm());
}

inline BlochVector RandomUnit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  BlochVector v{g(rng), g(rng), g(rng)};
  return v * (1.0 / v.Norm());
}

inline std::vector<double> RandomSimplex(std::mt19937_64& rng, int k) {
  std::exponential_distribution<double> e;
  std::vector<double> v(static_cast<std::size_t>(k));
  double sum = 0.0;
  for (double& d : v) sum += (d = e(rng));
  for (double& d : v) d /= sum;
  return v;
}

// Character sum straight from the definition, one coefficient at a time.
inline double NaiveFourier(const ClassicalEncoding& e, int m, std::uint32_t r) {
  double acc = 0.0;
  for (std::uint32_t x = 0; x < e.rows(); ++x) {
    int sign = 1;
    for (int i = 1; i <= e.n(); ++i) {
      if (((x >> (i - 1)) & 1u) && ((r >> (i - 1)) & 1u)) sign = -sign;
    }
    acc += sign * e(x, m);
  }
  return acc / e.rows();
}

inline Eigen::MatrixXcd ToEigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  return out;
}

inline Eigen::Matrix2cd ToEigen(const ComplexMatrix2& m) {
  Eigen::Matrix2cd out;
  out << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  return out;
}

// Trace norm via Eigen's self-adjoint solver.
inline double EigenTraceNorm(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  return es.eigenvalues().cwiseAbs().sum();
}

// Random models whose preparations are parity-balanced by construction:
// each lambda carries weight w(lambda) ~ (1 + sum_i c_i (-1)^{x_i}), i.e. a
// function of single bits only, which keeps every parity mixture identical.
inline HiddenVariableModel RandomNcModel(std::mt19937_64& rng, int n, int lambdas) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::uint32_t rows = 1u << n;
  std::vector<double> base(static_cast<std::size_t>(lambdas));
  std::vector<std::vector<double>> c(static_cast<std::size_t>(lambdas), std::vector<double>(n));
  for (int l = 0; l < lambdas; ++l) {
    base[l] = u(rng) + 0.1;
    for (int i = 0; i < n; ++i) c[l][i] = 2.0 * u(rng) - 1.0;
  }
  // Zero column sums keep the total weight independent of x, then one common
  // scale keeps the weights nonnegative.
  for (int i = 0; i < n; ++i) {
    double mean = 0.0;
    for (int l = 0; l < lambdas; ++l) mean += c[l][i] / lambdas;
    for (int l = 0; l < lambdas; ++l) c[l][i] -= mean;
  }
  double scale = 1.0;
  for (int l = 0; l < lambdas; ++l) {
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::abs(c[l][i]);
    if (norm > base[l]) scale = std::min(scale, base[l] / norm);
  }
  scale *= u(rng);
  for (auto& row : c)
    for (double& v : row) v *= scale;
  std::vector<double> prep(rows * static_cast<std::size_t>(lambdas));
  for (std::uint32_t x = 0; x < rows; ++x) {
    double sum = 0.0;
    for (int l = 0; l < lambdas; ++l) {
      double w = base[l];
      for (int i = 0; i < n; ++i) w += c[l][i] * (((x >> i) & 1u) ? -1.0 : 1.0);
      prep[x * lambdas + l] = w;
      sum += w;
    }
    for (int l = 0; l < lambdas; ++l) prep[x * lambdas + l] /= sum;
  }
  std::vector<double> resp(static_cast<std::size_t>(lambdas) * n);
  for (double& r : resp) r = u(rng) < 0.5 ? std::round(u(rng)) : u(rng);
  return HiddenVariableModel(n, lambdas, std::move(prep), std::move(resp));
}

// Canonical parity-oblivious strategy embedded as lambda = m, then its
// lambda labels shuffled; two such models are mixed by stacking their
// lambda sets with weights w and 1 - w.
inline HiddenVariableModel CanonicalNcModel(std::mt19937_64& rng, int n) {
  auto one = [&](int alphabet) {
    std::vector<double> weights = RandomSimplex(rng, n + 1);
    std::vector<double> p0 = RandomSimplex(rng, alphabet);
    std::vector<std::array<std::vector<double>, 2>> pib;
    for (int i = 0; i < n; ++i) pib.push_back({RandomSimplex(rng, alphabet), RandomSimplex(rng, alphabet)});
    // Sharp single-bit strategies sit exactly on the bound.
    if (std::bernoulli_distribution(0.3)(rng)) {
      const int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
      std::fill(weights.begin(), weights.end(), 0.0);
      weights[static_cast<std::size_t>(i) + 1] = 1.0;
      for (int b = 0; b < 2; ++b) {
        std::fill(pib[i][b].begin(), pib[i][b].end(), 0.0);
        pib[i][b][static_cast<std::size_t>(b)] = 1.0;
      }
    }
    const ClassicalEncoding e = ComposeCanonical(n, alphabet, weights, p0, pib);
    std::bernoulli_distribution coin;
    std::vector<int> bits(static_cast<std::size_t>(alphabet) * n);
    for (int& b : bits) b = coin(rng);
    const HiddenVariableModel h = EmbedClassicalStrategy(e, Decoder(n, alphabet, bits));
    std::vector<int> perm(static_cast<std::size_t>(alphabet));
    for (int i = 0; i < alphabet; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return std::make_pair(h, perm);
  };
  std::uniform_int_distribution<int> size(2, 6);
  const auto [a, pa] = one(size(rng));
  const auto [b, pb] = one(size(rng));
  const double w = std::uniform_real_distribution<double>(0, 1)(rng);
  const int la = a.lambdas(), lb = b.lambdas(), l = la + lb;
  const std::uint32_t rows = 1u << n;
  std::vector<double> prep(rows * static_cast<std::size_t>(l), 0.0);
  std::vector<double> resp(static_cast<std::size_t>(l) * n, 0.0);
  for (std::uint32_t x = 0; x < rows; ++x) {
    for (int k = 0; k < la; ++k) prep[x * l + pa[k]] = w * a.prep(x, k);
    for (int k = 0; k < lb; ++k) prep[x * l + la + pb[k]] = (1 - w) * b.prep(x, k);
  }
  for (int y = 1; y <= n; ++y) {
    for (int k = 0; k < la; ++k) resp[pa[k] * n + (y - 1)] = a.resp(k, y);
    for (int k = 0; k < lb; ++k) resp[(la + pb[k]) * n + (y - 1)] = b.resp(k, y);
  }
  return HiddenVariableModel(n, l, std::move(prep), std::move(resp));
}

}  // namespace pomlab::testing

#endif  // POMLAB_TESTS_TEST_SUPPORT_H_
