#pragma once

#include "catalog.hpp"
#include "cwt.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "hilbert.hpp"
#include "io.hpp"
#include "kernels.hpp"
#include "metrics.hpp"
#include "propositions.hpp"
#include "spectrum.hpp"

namespace wavepair {

inline constexpr const char* version = "0.1.0";

} // namespace wavepair
