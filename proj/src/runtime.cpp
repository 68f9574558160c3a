#include "impart/runtime.hpp"

#include <algorithm>
#include <cstdlib>

namespace impart {

int max_threads() {
    static const int cached = [] {
        const char* env = std::getenv("IMPART_THREADS");
        if (!env) return 1;
        const long parsed = std::strtol(env, nullptr, 10);
        return static_cast<int>(std::clamp(parsed, 1l, 64l));
    }();
    return cached;
}

}  // namespace impart
