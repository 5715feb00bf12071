#pragma once

// Umbrella header.

#include "hyperbessel/certificate.hpp"
#include "hyperbessel/dynamics.hpp"
#include "hyperbessel/errors.hpp"
#include "hyperbessel/fourier.hpp"
#include "hyperbessel/functional.hpp"
#include "hyperbessel/numerics.hpp"
#include "hyperbessel/rational.hpp"
#include "hyperbessel/serialization.hpp"
#include "hyperbessel/series.hpp"
#include "hyperbessel/special.hpp"
#include "hyperbessel/translation.hpp"
#include "hyperbessel/vector_index.hpp"

namespace hb {
inline constexpr const char* kVersion = "hyperbessel 0.1.0";
}
