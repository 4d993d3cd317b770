#pragma once

#include <cstdint>
#include <vector>

namespace conewerk {

// Sobol low-discrepancy sequence, up to 6 dimensions, Gray-code order.
// Deterministic; point 0 is the origin.
class SobolSequence {
 public:
  explicit SobolSequence(int dims);

  // Next point in [0,1)^dims.
  void next(double* out);
  void reset();

  int dims() const { return dims_; }

 private:
  int dims_;
  std::uint64_t index_ = 0;
  std::vector<std::uint64_t> state_;
  std::vector<std::vector<std::uint64_t>> direction_;  // [dim][bit]
};

// Deterministic per-block Cranley-Patterson shift in [0,1)^dims.
std::vector<double> qmc_block_shift(std::uint64_t seed, std::uint64_t block,
                                    int dims);

}  // namespace conewerk
