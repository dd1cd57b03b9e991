// Umbrella header.
#pragma once

#include "warpsol/core.hpp"
#include "warpsol/families.hpp"
#include "warpsol/fd_oracle.hpp"
#include "warpsol/geometry.hpp"
#include "warpsol/ode.hpp"
#include "warpsol/quadrature.hpp"
#include "warpsol/rb_family.hpp"
#include "warpsol/report_io.hpp"
#include "warpsol/roots.hpp"
#include "warpsol/series.hpp"
#include "warpsol/synthesis.hpp"
#include "warpsol/warp_profile.hpp"
