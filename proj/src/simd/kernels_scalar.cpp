#include "topgeo/simd/kernel_impl.hpp"
#include "topgeo/simd/pack.hpp"

namespace topgeo::simd {

const Kernels kKernelsScalar = KernelImpl<PackRef>::table("scalar");

}  // namespace topgeo::simd
