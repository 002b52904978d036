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

#ifndef FEDS_TESTS_SUPPORT_HPP_
#define FEDS_TESTS_SUPPORT_HPP_

#include <cmath>
#include <cstdint>

#include "feds/common.hpp"
#include "feds/matrix.hpp"
#include "feds/rng.hpp"

namespace feds::testsupport {

inline Bytes random_bytes(Rng& rng, size_t n) {
  Bytes out(n);
  rng.fill(out);
  return out;
}

inline Key128 random_key(Rng& rng) {
  Key128 k;
  rng.fill(k);
  return k;
}

inline Iv128 random_iv(Rng& rng) {
  Iv128 iv;
  rng.fill(iv);
  return iv;
}

// Synthesizes an image with natural-photo statistics: smooth illumination,
// a few soft blobs, low-frequency texture and mild sensor noise. Adjacent
// pixels correlate strongly and the histogram is far from uniform, which is
// what the security metrics assume about their plain inputs.
inline Matrix natural_image(size_t rows, size_t cols, uint64_t seed) {
  Rng rng(seed);
  struct Blob {
    double r, c, sr, sc, amp;
  };
  const int nblobs = 6 + static_cast<int>(rng.next_below(5));
  std::vector<Blob> blobs;
  for (int i = 0; i < nblobs; ++i) {
    Blob b;
    b.r = static_cast<double>(rng.next_below(rows));
    b.c = static_cast<double>(rng.next_below(cols));
    b.sr = 8.0 + static_cast<double>(rng.next_below(rows / 3 + 1));
    b.sc = 8.0 + static_cast<double>(rng.next_below(cols / 3 + 1));
    b.amp = (rng.next_below(2) == 0 ? -1.0 : 1.0) *
            (30.0 + static_cast<double>(rng.next_below(70)));
    blobs.push_back(b);
  }
  const double fr = 2.0 * 3.14159265358979 *
                    (1.0 + static_cast<double>(rng.next_below(3))) /
                    static_cast<double>(rows);
  const double fc = 2.0 * 3.14159265358979 *
                    (1.0 + static_cast<double>(rng.next_below(3))) /
                    static_cast<double>(cols);
  const double phase = static_cast<double>(rng.next_below(628)) / 100.0;

  Matrix img(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      double v = 110.0;
      v += 35.0 * std::sin(fr * static_cast<double>(r) + phase) *
           std::cos(fc * static_cast<double>(c));
      v += 20.0 * (static_cast<double>(r) / static_cast<double>(rows) -
                   static_cast<double>(c) / static_cast<double>(cols));
      for (const Blob& b : blobs) {
        const double dr = (static_cast<double>(r) - b.r) / b.sr;
        const double dc = (static_cast<double>(c) - b.c) / b.sc;
        v += b.amp * std::exp(-0.5 * (dr * dr + dc * dc));
      }
      v += static_cast<double>(rng.next_below(7)) - 3.0;  // sensor noise
      if (v < 0.0) v = 0.0;
      if (v > 255.0) v = 255.0;
      img.at(r, c) = static_cast<uint8_t>(v + 0.5);
    }
  }
  return img;
}

}  // namespace feds::testsupport

#endif  // FEDS_TESTS_SUPPORT_HPP_
