#pragma once

namespace ucycle {

// Selects the kernel lane for data-parallel operations. The parallel lane
// must produce output identical to the serial reference; tests compare them.
enum class Execution { serial, parallel };

}  // namespace ucycle
