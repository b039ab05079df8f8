#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosskit {

// Error taxonomy: callers can distinguish bad input from blown budgets.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : error {
  using error::error;
};
struct domain_error : error {
  using error::error;
};
struct structure_error : error {
  using error::error;
};
struct budget_error : error {
  using error::error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw domain_error(msg);
}
inline void require_structure(bool cond, const std::string& msg) {
  if (!cond) throw structure_error(msg);
}

// Work limits for the search-style operations.  nodes==0 or seconds==0 means unlimited.
struct Budget {
  std::uint64_t node_limit = 0;
  double seconds_limit = 0.0;
  static Budget nodes(std::uint64_t n) { return Budget{n, 0.0}; }
  static Budget unlimited() { return Budget{}; }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic RNG; substreams let parallel restarts stay reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}
  Rng substream(std::uint64_t id) const {
    return Rng(splitmix64(seed_base_ ^ (0x9e3779b97f4a7c15ULL * (id + 1))));
  }
  static Rng stream(std::uint64_t seed, std::uint64_t id) {
    Rng r(splitmix64(seed ^ splitmix64(id + 0x51ed2701)));
    r.seed_base_ = seed ^ splitmix64(id + 0x51ed2701);
    return r;
  }
  std::uint64_t next() { return eng_(); }
  // uniform in [0,1); bit-stable across platforms (no std::distribution involved)
  double u01() { return double(eng_() >> 11) * 0x1.0p-53; }
  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t threshold = (0 - n) % n;  // rejection sampling, unbiased
    for (;;) {
      std::uint64_t r = eng_();
      if (r >= threshold) return r % n;
    }
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  explicit Rng(std::uint64_t raw, int) : eng_(raw) {}
  std::mt19937_64 eng_;
  std::uint64_t seed_base_ = 0;
};

// Canonical shortest decimal formatting so serialized reports are byte-stable.
std::string format_double(double v);

}  // namespace crosskit
