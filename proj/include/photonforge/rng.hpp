#pragma once

#include <array>
#include <cstdint>

namespace photonforge {

/// Philox4x32-10 counter-based block function.
///
/// Stateless: the output block is a pure function of (counter, key), which is
/// what makes per-photon streams reproducible regardless of scheduling.
struct Philox4x32 {
  static constexpr uint32_t kMul0 = 0xD2511F53u;
  static constexpr uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const uint64_t p0 = static_cast<uint64_t>(kMul0) * ctr[0];
      const uint64_t p1 = static_cast<uint64_t>(kMul1) * ctr[2];
      const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32);
      const uint32_t lo0 = static_cast<uint32_t>(p0);
      const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32);
      const uint32_t lo1 = static_cast<uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

/// Per-photon random stream keyed by (master_seed, photon_index).
///
/// Identical (master_seed, photon_index) yields an identical draw sequence no
/// matter which worker consumes it or in which order photons are traced. The
/// draw counter advances one 32-bit word at a time; blocks are generated on
/// demand from the Philox counter (photon_index, block_index).
class RngStream {
 public:
  RngStream(uint64_t master_seed, uint64_t photon_index)
      : master_seed_(master_seed), photon_index_(photon_index) {}

  uint64_t master_seed() const { return master_seed_; }
  uint64_t photon_index() const { return photon_index_; }
  uint64_t draw_counter() const { return draw_counter_; }

  uint32_t next_u32() {
    if (pos_ == 4) refill();
    ++draw_counter_;
    return buf_[pos_++];
  }

  /// Uniform double strictly inside (0, 1); safe for -log(u).
  double uniform() { return (static_cast<double>(next_u32()) + 0.5) * 0x1p-32; }

 private:
  void refill() {
    const std::array<uint32_t, 4> ctr = {
        static_cast<uint32_t>(photon_index_), static_cast<uint32_t>(photon_index_ >> 32),
        static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32)};
    const std::array<uint32_t, 2> key = {static_cast<uint32_t>(master_seed_),
                                         static_cast<uint32_t>(master_seed_ >> 32)};
    buf_ = Philox4x32::block(ctr, key);
    ++block_;
    pos_ = 0;
  }

  uint64_t master_seed_;
  uint64_t photon_index_;
  uint64_t draw_counter_ = 0;
  uint64_t block_ = 0;
  std::array<uint32_t, 4> buf_{};
  int pos_ = 4;
};

/// SplitMix64 finalizer; used to derive per-scenario seeds from a master seed
/// and an id hash so partial reruns stay reproducible.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9E3779B97F4A7C15ull + b;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// FNV-1a 64-bit; header checksums and stable id hashes.
inline uint64_t fnv1a64(const void* data, std::size_t size, uint64_t seed = 0xCBF29CE484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace photonforge
