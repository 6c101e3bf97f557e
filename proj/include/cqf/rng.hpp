#pragma once

#include <cstdint>
#include <random>

#include "cqf/mat.hpp"

namespace cqf {

/// Seeded RNG stream for instance generation and sampling. All draws come
/// from one mt19937_64 stream, so a given seed reproduces the same sequence.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }  // [0, 1)

    Mat normal_mat(int rows, int cols) {
        Mat m(rows, cols);
        for (double& x : m.data()) x = normal();
        return m;
    }

    Mat symmetric_normal(int n) { return symmetrize(normal_mat(n, n)); }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Decorrelated child seed for sub-task `index` of a run seeded with `seed`
/// (splitmix64 finalizer), so parallel sub-tasks get independent streams.
inline std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace cqf
