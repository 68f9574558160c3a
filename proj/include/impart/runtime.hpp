#pragma once

namespace impart {

// Internal parallelism cap from IMPART_THREADS; defaults to 1.
int max_threads();

}  // namespace impart
