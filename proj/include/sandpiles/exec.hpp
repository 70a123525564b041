#pragma once

namespace sandpiles {

// Kernel selector. `serial` runs the reference implementations, `parallel`
// the OpenMP kernels. Both produce identical results (asserted by tests);
// callers that already parallelize at an outer level pass `serial`.
enum class Exec { serial, parallel };

}  // namespace sandpiles
