#pragma once

// Umbrella header: the whole library except the CLI frontend.

#include "basis.hpp"
#include "dbar.hpp"
#include "errors.hpp"
#include "hankel.hpp"
#include "json_io.hpp"
#include "laguerre.hpp"
#include "oracle.hpp"
#include "polypoly.hpp"
#include "projection.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "scalar.hpp"
#include "verify.hpp"
