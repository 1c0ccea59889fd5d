#pragma once

#include "emlab/errors.hpp"
#include "emlab/numerics/complex.hpp"
#include "emlab/numerics/format.hpp"
#include "emlab/numerics/log_complex.hpp"
#include "emlab/numerics/precision.hpp"
#include "emlab/numerics/real.hpp"
#include "emlab/numerics/scalar.hpp"
#include "emlab/numerics/sector.hpp"
#include "emlab/special/bernoulli.hpp"
#include "emlab/special/digamma.hpp"
#include "emlab/special/euler.hpp"
#include "emlab/em/engine.hpp"
#include "emlab/em/expansion.hpp"
#include "emlab/em/function_model.hpp"
#include "emlab/em/models.hpp"
#include "emlab/em/remainder_fit.hpp"
#include "emlab/lattice/lattice_sums.hpp"
#include "emlab/modular/eisenstein.hpp"
#include "emlab/modular/partition_gf.hpp"
#include "emlab/modular/sequences.hpp"
#include "emlab/modular/tables.hpp"
#include "emlab/tauberian/ingham.hpp"
#include "emlab/counterexample/avakumovic_karamata.hpp"
