#ifndef LOCALCOLOR_RNG_HPP
#define LOCALCOLOR_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace localcolor {

// splitmix64 finalizer; used to turn (master_seed, stream_id) into engine seeds
// and to derive child stream ids.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic randomness addressed by (master_seed, stream_id).
// Equal pairs give equal bit streams. child(i) derives a new stream whose
// output is unrelated to the parent's; derivation is pure, so a stream can be
// rebuilt at any time without replaying draws.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_(master_seed),
        id_(stream_id),
        engine_(mix64(mix64(master_seed) ^ mix64(stream_id) ^ 0x5851f42d4c957f2dULL)) {}

  std::uint64_t master_seed() const { return master_; }
  std::uint64_t stream_id() const { return id_; }

  RngStream child(std::uint64_t index) const {
    return RngStream(master_, mix64(id_ + 0x9e3779b97f4a7c15ULL * (index + 1)));
  }

  std::uint64_t next_u64() { return engine_(); }

  // uniform double in [0,1), 53 bits
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next_unit() < p;
  }

  // uniform over {0,...,m-1}, rejection sampling kills modulo bias
  std::uint64_t below(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("RngStream::below: m must be positive");
    if (m == 1) return 0;
    const std::uint64_t threshold = (0 - m) % m;  // 2^64 mod m
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % m;
    }
  }

 private:
  std::uint64_t master_;
  std::uint64_t id_;
  std::mt19937_64 engine_;
};

}  // namespace localcolor

#endif
