#pragma once

#include "hmclass/arrangement.hpp"
#include "hmclass/errors.hpp"
#include "hmclass/ktheory.hpp"
#include "hmclass/lattice.hpp"
#include "hmclass/poly_y.hpp"
#include "hmclass/proj_class.hpp"
#include "hmclass/rat_y.hpp"
#include "hmclass/rational.hpp"
#include "hmclass/sigma_class.hpp"
#include "hmclass/spectrum.hpp"
#include "hmclass/spectrum_engine.hpp"
#include "hmclass/trunc_series.hpp"
