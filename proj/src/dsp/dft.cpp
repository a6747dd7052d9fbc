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
#include "v2xlink/dsp/dft.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

namespace v2xlink::dsp {

bool dft_size_supported(Eigen::Index n) {
    if (n <= 0) return false;
    if (n <= 4096 && (n & (n - 1)) == 0) return true;
    return n % 12 == 0 && n <= 1200;
}

CVec dft(const CVec& x, bool inverse) {
    const Eigen::Index n = x.size();
    if (!dft_size_supported(n)) throw std::invalid_argument("unsupported DFT length " + std::to_string(n));

    // One FFT engine per thread; it caches plans for every size it has seen.
    thread_local Eigen::FFT<double> fft;
    CVec y(n);
    if (inverse) {
        fft.inv(y, x);
        y *= std::sqrt(static_cast<double>(n));  // Eigen inv scales by 1/N
    } else {
        fft.fwd(y, x);
        y /= std::sqrt(static_cast<double>(n));
    }
    return y;
}

}  // namespace v2xlink::dsp
