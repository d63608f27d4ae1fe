#pragma once

#include <cstdint>
#include <random>

namespace mablink {

// splitmix64, used only to derive well-separated seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

enum class Stream : std::uint64_t {
  InitOrder = 1,
  Payload = 2,
  Fading = 3,
  Noise = 4,
  LeadIn = 5,
  RandomArm = 6,
};

// Per-slot substreams keyed by (master seed, stream, slot, counter).
// A slot's payload/fading/noise draws do not depend on how many random
// numbers earlier slots consumed, so runs that differ only in modulation
// or retry count stay sample-for-sample comparable.
class SlotRng {
 public:
  explicit SlotRng(std::uint64_t master_seed) : master_(master_seed) {}

  std::mt19937_64 stream(Stream which, std::uint64_t slot,
                         std::uint64_t counter = 0) const {
    std::uint64_t s = master_;
    s ^= splitmix64(s) + static_cast<std::uint64_t>(which);
    s ^= splitmix64(s) + slot;
    s ^= splitmix64(s) + counter;
    return std::mt19937_64(splitmix64(s));
  }

  std::uint64_t master() const { return master_; }

 private:
  std::uint64_t master_;
};

}  // namespace mablink
