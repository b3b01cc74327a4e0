#pragma once

// Umbrella header for the core library (everything except JSON and CLI).

#include "complex.hpp"     // IWYU pragma: export
#include "field.hpp"       // IWYU pragma: export
#include "linalg.hpp"      // IWYU pragma: export
#include "cochain.hpp"     // IWYU pragma: export
#include "hochster.hpp"    // IWYU pragma: export
#include "massey.hpp"      // IWYU pragma: export
#include "obstruction.hpp" // IWYU pragma: export
#include "oracle.hpp"      // IWYU pragma: export
