#include "tint/random.hpp"

namespace tint {

namespace {
constexpr std::uint64_t kElicitationStream = 0x656c696369746174ULL;  // "elicitat"
constexpr std::uint64_t kSelectionStream = 0x73656c656374696fULL;    // "selectio"
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                std::uint64_t point_hash,
                                std::uint64_t trial_index) {
  return splitmix64(splitmix64(master_seed ^ point_hash) ^ trial_index);
}

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool bernoulli(Rng& rng, double p) {
  // Always consume one variate so the stream position does not depend on p.
  const double u = uniform01(rng);
  return u < p;
}

TrialRngs::TrialRngs(std::uint64_t trial_seed)
    : elicitation(splitmix64(trial_seed ^ kElicitationStream)),
      selection(splitmix64(trial_seed ^ kSelectionStream)) {}

}  // namespace tint
