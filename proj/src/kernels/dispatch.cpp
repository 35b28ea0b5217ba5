// Copyright 2026 The rqi-anyons Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "rqi/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace rqi::kernels {

#if !defined(RQI_HAVE_AVX2)
const KernelTable *avx2_table() { return nullptr; }
#endif

bool cpu_supports_avx2() {
#if defined(RQI_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const KernelTable &select_table() {
    std::string_view request = "auto";
    if (const char *env = std::getenv("RQI_SIMD")) {
        request = env;
    }
    if (request == "scalar") {
        return scalar_table();
    }
    const KernelTable *vec = avx2_table();
    if (vec != nullptr && cpu_supports_avx2()) {
        return *vec;
    }
    return scalar_table();
}

} // namespace

const KernelTable &active() {
    static const KernelTable &table = select_table();
    return table;
}

} // namespace rqi::kernels
