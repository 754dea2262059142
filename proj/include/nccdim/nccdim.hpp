#pragma once

// Umbrella header for the whole library.

#include "nccdim/curve.hpp"
#include "nccdim/divisor.hpp"
#include "nccdim/error.hpp"
#include "nccdim/hn.hpp"
#include "nccdim/kclass.hpp"
#include "nccdim/quiver.hpp"
#include "nccdim/rational.hpp"
#include "nccdim/stability.hpp"
