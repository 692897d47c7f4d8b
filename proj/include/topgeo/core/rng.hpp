#ifndef TOPGEO_CORE_RNG_HPP
#define TOPGEO_CORE_RNG_HPP

#include <cstdint>
#include <string_view>

namespace topgeo {

// Deterministic across platforms and standard libraries; seeded streams must
// reproduce byte-identical reports, so no std::uniform_real_distribution here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int n) { return int(next_u64() % std::uint64_t(n)); }

 private:
  std::uint64_t state_;
};

// stable per-check substream derivation
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (char c : tag) {
    h ^= std::uint64_t(static_cast<unsigned char>(c));
    h *= 0x100000001b3ull;
  }
  Rng mix(master ^ h);
  return mix.next_u64();
}

}  // namespace topgeo

#endif
