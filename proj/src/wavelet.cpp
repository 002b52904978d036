// Copyright 2026 The feds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "feds/wavelet.hpp"

#include <cstdlib>
#include <string>

#include "feds/errors.hpp"

namespace feds {

namespace {

// C++20 guarantees arithmetic right shift on signed values, so `>> 1` and
// `>> 2` are exact floor divisions by 2 and 4.

inline void check_even_pair(size_t n, size_t low, size_t high) {
  if (n < 2 || n % 2 != 0) {
    fail(Errc::kOddLength, "signal length must be even and >= 2, got " +
                               std::to_string(n));
  }
  if (low != n / 2 || high != n / 2) {
    fail(Errc::kLengthMismatch, "low/high halves must each be N/2");
  }
}

}  // namespace

void fwd53_1d(std::span<const int32_t> x, std::span<int32_t> low,
              std::span<int32_t> high) {
  const size_t n = x.size();
  check_even_pair(n, low.size(), high.size());
  const size_t half = n / 2;
  // Predict: high[k] = x(2k+1) - floor((x(2k) + x(2k+2)) / 2),
  // with x(N) mirrored to x(N-2).
  for (size_t k = 0; k < half; ++k) {
    int32_t right = (2 * k + 2 < n) ? x[2 * k + 2] : x[n - 2];
    high[k] = x[2 * k + 1] - ((x[2 * k] + right) >> 1);
  }
  // Update: low[k] = x(2k) + floor((high[k-1] + high[k] + 2) / 4),
  // with high[-1] mirrored to high[0].
  for (size_t k = 0; k < half; ++k) {
    int32_t left = (k > 0) ? high[k - 1] : high[0];
    low[k] = x[2 * k] + ((left + high[k] + 2) >> 2);
  }
}

void inv53_1d(std::span<const int32_t> low, std::span<const int32_t> high,
              std::span<int32_t> x) {
  if (low.size() != high.size()) {
    fail(Errc::kLengthMismatch, "low/high length mismatch");
  }
  const size_t half = low.size();
  if (half == 0 || x.size() != 2 * half) {
    fail(Errc::kLengthMismatch, "output must be twice the half length");
  }
  const size_t n = 2 * half;
  for (size_t k = 0; k < half; ++k) {
    int32_t left = (k > 0) ? high[k - 1] : high[0];
    x[2 * k] = low[k] - ((left + high[k] + 2) >> 2);
  }
  for (size_t k = 0; k < half; ++k) {
    int32_t right = (2 * k + 2 < n) ? x[2 * k + 2] : x[n - 2];
    x[2 * k + 1] = high[k] + ((x[2 * k] + right) >> 1);
  }
}

std::pair<std::vector<int32_t>, std::vector<int32_t>> fwd53_1d(
    std::span<const int32_t> signal) {
  std::vector<int32_t> low(signal.size() / 2), high(signal.size() / 2);
  if (signal.size() < 2 || signal.size() % 2 != 0) {
    fail(Errc::kOddLength, "signal length must be even and >= 2");
  }
  fwd53_1d(signal, low, high);
  return {std::move(low), std::move(high)};
}

std::vector<int32_t> inv53_1d(std::span<const int32_t> low,
                              std::span<const int32_t> high) {
  std::vector<int32_t> x(low.size() + high.size());
  inv53_1d(low, high, x);
  return x;
}

namespace {

// One 2D level in place on the top-left size x size corner of an 8-wide
// buffer: rows first, then columns; lows land in the first half.
void level_forward(int32_t* buf, size_t size) {
  int32_t tmp[8], lo[4], hi[4];
  const size_t half = size / 2;
  for (size_t r = 0; r < size; ++r) {
    int32_t* row = buf + 8 * r;
    fwd53_1d({row, size}, {lo, half}, {hi, half});
    for (size_t i = 0; i < half; ++i) {
      row[i] = lo[i];
      row[half + i] = hi[i];
    }
  }
  for (size_t c = 0; c < size; ++c) {
    for (size_t r = 0; r < size; ++r) tmp[r] = buf[8 * r + c];
    fwd53_1d({tmp, size}, {lo, half}, {hi, half});
    for (size_t r = 0; r < half; ++r) {
      buf[8 * r + c] = lo[r];
      buf[8 * (half + r) + c] = hi[r];
    }
  }
}

void level_inverse(int32_t* buf, size_t size) {
  int32_t tmp[8], lo[4], hi[4];
  const size_t half = size / 2;
  for (size_t c = 0; c < size; ++c) {
    for (size_t r = 0; r < half; ++r) {
      lo[r] = buf[8 * r + c];
      hi[r] = buf[8 * (half + r) + c];
    }
    inv53_1d({lo, half}, {hi, half}, {tmp, size});
    for (size_t r = 0; r < size; ++r) buf[8 * r + c] = tmp[r];
  }
  for (size_t r = 0; r < size; ++r) {
    int32_t* row = buf + 8 * r;
    for (size_t i = 0; i < half; ++i) {
      lo[i] = row[i];
      hi[i] = row[half + i];
    }
    inv53_1d({lo, half}, {hi, half}, {tmp, size});
    for (size_t i = 0; i < size; ++i) row[i] = tmp[i];
  }
}

void check_bound(std::span<const int32_t> values, int32_t bound,
                 const char* name) {
  for (int32_t v : values) {
    if (v < -bound || v > bound) {
      fail(Errc::kRangeViolation, std::string(name) + " coefficient " +
                                      std::to_string(v) + " outside +-" +
                                      std::to_string(bound));
    }
  }
}

}  // namespace

SubbandSet fwd53_block(const Block8& block) {
  int32_t buf[64];
  for (int i = 0; i < 64; ++i) buf[i] = block[i];

  level_forward(buf, 8);
  SubbandSet s;
  for (size_t r = 0; r < 4; ++r) {
    for (size_t c = 0; c < 4; ++c) {
      s.l1_HL[4 * r + c] = buf[8 * r + (c + 4)];
      s.l1_LH[4 * r + c] = buf[8 * (r + 4) + c];
      s.l1_HH[4 * r + c] = buf[8 * (r + 4) + (c + 4)];
    }
  }
  level_forward(buf, 4);
  for (size_t r = 0; r < 2; ++r) {
    for (size_t c = 0; c < 2; ++c) {
      s.l2_LL[2 * r + c] = buf[8 * r + c];
      s.l2_HL[2 * r + c] = buf[8 * r + (c + 2)];
      s.l2_LH[2 * r + c] = buf[8 * (r + 2) + c];
      s.l2_HH[2 * r + c] = buf[8 * (r + 2) + (c + 2)];
    }
  }

  check_bound(s.l1_HL, kBoundL1HL, "1stHL");
  check_bound(s.l1_LH, kBoundL1LH, "1stLH");
  check_bound(s.l1_HH, kBoundL1HH, "1stHH");
  check_bound(s.l2_LL, kBoundL2LL, "2ndLL");
  check_bound(s.l2_HL, kBoundL2HL, "2ndHL");
  check_bound(s.l2_LH, kBoundL2LH, "2ndLH");
  check_bound(s.l2_HH, kBoundL2HH, "2ndHH");
  return s;
}

Block8 inv53_block(const SubbandSet& s) {
  int32_t buf[64] = {0};
  for (size_t r = 0; r < 2; ++r) {
    for (size_t c = 0; c < 2; ++c) {
      buf[8 * r + c] = s.l2_LL[2 * r + c];
      buf[8 * r + (c + 2)] = s.l2_HL[2 * r + c];
      buf[8 * (r + 2) + c] = s.l2_LH[2 * r + c];
      buf[8 * (r + 2) + (c + 2)] = s.l2_HH[2 * r + c];
    }
  }
  level_inverse(buf, 4);
  for (size_t r = 0; r < 4; ++r) {
    for (size_t c = 0; c < 4; ++c) {
      buf[8 * r + (c + 4)] = s.l1_HL[4 * r + c];
      buf[8 * (r + 4) + c] = s.l1_LH[4 * r + c];
      buf[8 * (r + 4) + (c + 4)] = s.l1_HH[4 * r + c];
    }
  }
  level_inverse(buf, 8);

  Block8 out;
  for (int i = 0; i < 64; ++i) out[i] = buf[i];
  return out;
}

}  // namespace feds
