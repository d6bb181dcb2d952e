// Umbrella header.
#pragma once

#include "lfk/gauss_rat.hpp"
#include "lfk/poly.hpp"
#include "lfk/ratfun.hpp"
#include "lfk/forms.hpp"
#include "lfk/report.hpp"
#include "lfk/mirror.hpp"
#include "lfk/levi.hpp"
#include "lfk/linear_solve.hpp"
#include "lfk/pencil.hpp"
#include "lfk/classify.hpp"
#include "lfk/projective.hpp"
#include "lfk/parse.hpp"
