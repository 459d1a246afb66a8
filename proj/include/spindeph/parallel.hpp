#pragma once

/// \file
/// Execution policy and per-work-item random streams shared by the Monte
/// Carlo kernels. Each kernel has a serial reference path and an OpenMP
/// path; both write into index-addressed slots and reduce in fixed order,
/// so the results are bitwise identical for any thread count.

#include <cstdint>
#include <random>

namespace spindeph {

enum class Backend { Serial, OpenMP };

struct ExecutionPolicy {
  Backend backend = Backend::OpenMP;
  int threads = 0;  // 0: OpenMP default

  static ExecutionPolicy serial() { return {Backend::Serial, 1}; }
  static ExecutionPolicy openmp(int threads = 0) { return {Backend::OpenMP, threads}; }
};

using Engine = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the independent stream for work item `index`.
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

inline Engine make_engine(std::uint64_t master, std::uint64_t index) {
  return Engine{stream_seed(master, index)};
}

}  // namespace spindeph
