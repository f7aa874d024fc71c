#pragma once

#include "saw/aztec.hpp"
#include "saw/bignat.hpp"
#include "saw/combinatorics.hpp"
#include "saw/error.hpp"
#include "saw/girth_dp.hpp"
#include "saw/glauber.hpp"
#include "saw/lattice.hpp"
#include "saw/oracle.hpp"
#include "saw/path_theory.hpp"
#include "saw/render.hpp"
#include "saw/rng.hpp"
#include "saw/sampler.hpp"
