#include "tama/matrix.hpp"

namespace tama {
bool use_parallel_kernels = true;
}
