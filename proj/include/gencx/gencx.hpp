#pragma once

// Umbrella header.

#include "gencx/error.hpp"
#include "gencx/scalar.hpp"
#include "gencx/matrix.hpp"
#include "gencx/linalg.hpp"
#include "gencx/gcs.hpp"
#include "gencx/spinor.hpp"
#include "gencx/lie.hpp"
#include "gencx/hyper.hpp"
#include "gencx/twistor.hpp"
#include "gencx/report.hpp"
#include "gencx/examples.hpp"
#include "gencx/io.hpp"
