#include "conewerk/sobol.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace conewerk {

namespace {

constexpr int kBits = 52;

struct DirectionSpec {
  int s;
  std::uint64_t a;
  std::uint64_t m[4];
};

// Primitive-polynomial data for dimensions 2..6 (dimension 1 is the
// van der Corput radical inverse).
constexpr DirectionSpec kSpecs[] = {
    {1, 0, {1, 0, 0, 0}},
    {2, 1, {1, 3, 0, 0}},
    {3, 1, {1, 3, 1, 0}},
    {3, 2, {1, 1, 1, 0}},
    {4, 1, {1, 1, 3, 3}},
};

std::vector<std::uint64_t> directions_for(int dim) {
  std::vector<std::uint64_t> m(kBits);
  if (dim == 0) {
    for (int k = 0; k < kBits; ++k) m[k] = 1;
  } else {
    const DirectionSpec& spec = kSpecs[dim - 1];
    for (int k = 0; k < spec.s && k < kBits; ++k) m[k] = spec.m[k];
    for (int k = spec.s; k < kBits; ++k) {
      std::uint64_t v = m[k - spec.s] ^ (m[k - spec.s] << spec.s);
      for (int i = 1; i < spec.s; ++i) {
        const std::uint64_t ai = (spec.a >> (spec.s - 1 - i)) & 1u;
        if (ai) v ^= m[k - i] << i;
      }
      m[k] = v;
    }
  }
  std::vector<std::uint64_t> v(kBits);
  for (int k = 0; k < kBits; ++k) v[k] = m[k] << (kBits - 1 - k);
  return v;
}

}  // namespace

SobolSequence::SobolSequence(int dims) : dims_(dims) {
  if (dims < 1 || dims > 6)
    throw std::invalid_argument("sobol supports 1..6 dimensions");
  state_.assign(dims_, 0);
  direction_.reserve(dims_);
  for (int d = 0; d < dims_; ++d) direction_.push_back(directions_for(d));
}

void SobolSequence::next(double* out) {
  constexpr double scale = 1.0 / double(std::uint64_t{1} << kBits);
  for (int d = 0; d < dims_; ++d) out[d] = double(state_[d]) * scale;
  const int bit = std::countr_zero(~index_);  // Gray-code flip position
  for (int d = 0; d < dims_; ++d) state_[d] ^= direction_[d][bit];
  ++index_;
}

void SobolSequence::reset() {
  index_ = 0;
  std::fill(state_.begin(), state_.end(), 0);
}

std::vector<double> qmc_block_shift(std::uint64_t seed, std::uint64_t block,
                                    int dims) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + block + 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> shift(dims);
  for (double& s : shift) s = u(rng);
  return shift;
}

}  // namespace conewerk
