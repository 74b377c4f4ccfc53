#pragma once

#include "infill/artifacts.hpp"
#include "infill/case_study.hpp"
#include "infill/csv.hpp"
#include "infill/desirability.hpp"
#include "infill/design.hpp"
#include "infill/diagnostics.hpp"
#include "infill/errors.hpp"
#include "infill/evaluation.hpp"
#include "infill/forest.hpp"
#include "infill/gp.hpp"
#include "infill/moo.hpp"
#include "infill/numfmt.hpp"
#include "infill/rng.hpp"
#include "infill/spacefill.hpp"
#include "infill/surrogate.hpp"
#include "infill/svg.hpp"
#include "infill/types.hpp"
