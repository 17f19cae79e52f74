#ifndef SGKIT_COMMON_HPP
#define SGKIT_COMMON_HPP

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sgkit {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSupportThreshold = 1e-9;

/// Counter-based random stream (splitmix64). Streams derived from
/// (seed, index) are independent of thread scheduling, so Monte-Carlo
/// sweeps reproduce exactly regardless of worker count.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {
    next_u64();
  }

  static RngStream derive(std::uint64_t seed, std::uint64_t index) {
    RngStream base(seed);
    std::uint64_t mixed = base.next_u64() + 0x9e3779b97f4a7c15ULL * (index + 1);
    return RngStream(mix(mixed));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n) via 128-bit multiply (n > 0).
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// k distinct indices from [0, n), order of first occurrence.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(uniform_index(n - i));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t state_;
};

/// Worker cap: SGKIT_THREADS env var, else hardware concurrency.
inline unsigned max_workers() {
  if (const char* env = std::getenv("SGKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

/// Index-sharded parallel loop. Each index writes only its own slot in the
/// caller's output, so results are deterministic for any worker count.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  unsigned workers = max_workers();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// Shortest decimal string that round-trips the double exactly.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace sgkit

#endif  // SGKIT_COMMON_HPP
