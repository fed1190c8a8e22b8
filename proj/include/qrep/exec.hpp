#pragma once

namespace qrep {

// Selects the reference loop or the OpenMP loop of a kernel.
// Both produce identical results; serial is kept for testing.
enum class Exec { serial, parallel };

}  // namespace qrep
