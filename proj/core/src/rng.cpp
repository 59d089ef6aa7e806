#include "pseudograph/rng.hpp"

namespace pseudograph {

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  // Lemire-free simple rejection keeps the stream easy to reproduce by hand.
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

}  // namespace pseudograph
