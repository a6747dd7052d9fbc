/*
 * Copyright 2026 the v2xlink authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "v2xlink/types.hpp"

namespace v2xlink::dsp {

/// True for the transform lengths the simulator uses: powers of two up to
/// 4096 (OFDM/SC-FDMA symbols) and multiples of 12 up to 1200 (transform
/// precoding, one DFT per allocated symbol).
bool dft_size_supported(Eigen::Index n);

/// Unitary DFT (1/sqrt(N) both directions): inverse(forward(x)) == x and
/// the transform preserves the l2 norm.
CVec dft(const CVec& x, bool inverse = false);

inline CVec idft(const CVec& x) { return dft(x, true); }

}  // namespace v2xlink::dsp
