#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sphsmooth/document.hpp"

namespace testing_support {

inline std::filesystem::path fixture_dir() { return SPHSMOOTH_FIXTURE_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline sphsmooth::Document load_fixture(const std::string& name) {
  return sphsmooth::parse_document(read_file(fixture_dir() / name));
}

/// Every JSON fixture, recursively, in a stable order.
inline std::vector<std::filesystem::path> all_fixtures() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(fixture_dir()))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline sphsmooth::IntVector iv(std::initializer_list<long> xs) {
  sphsmooth::IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline sphsmooth::IntVector random_vector(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  sphsmooth::IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(dist(rng));
  return v;
}

/// Random matrix with determinant ±1, built from elementary operations.
inline sphsmooth::IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12) {
  auto m = sphsmooth::IntMatrix::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const auto i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const int k = coef(rng);
    for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
  }
  return m;
}

}  // namespace testing_support
