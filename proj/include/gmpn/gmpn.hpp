#pragma once

// Umbrella header: the whole G(m,p,n) toolkit in one include.

#include "gmpn/errors.hpp"
#include "gmpn/guards.hpp"
#include "gmpn/group_params.hpp"
#include "gmpn/element.hpp"
#include "gmpn/text.hpp"
#include "gmpn/reflection.hpp"
#include "gmpn/cycles.hpp"
#include "gmpn/graph.hpp"
#include "gmpn/enumerate.hpp"
#include "gmpn/length.hpp"
#include "gmpn/factorization.hpp"
#include "gmpn/hurwitz.hpp"
#include "gmpn/doubled_path.hpp"
#include "gmpn/standard_form.hpp"
#include "gmpn/subgroup.hpp"
#include "gmpn/orbit_census.hpp"
#include "gmpn/quasicoxeter.hpp"
