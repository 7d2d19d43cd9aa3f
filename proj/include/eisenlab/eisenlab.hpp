#pragma once

#include "eisenlab/errors.hpp"
#include "eisenlab/formula.hpp"
#include "eisenlab/gl2.hpp"
#include "eisenlab/hecke.hpp"
#include "eisenlab/iwasawa.hpp"
#include "eisenlab/langlands.hpp"
#include "eisenlab/quadrature.hpp"
#include "eisenlab/rational.hpp"
#include "eisenlab/special_functions.hpp"
#include "eisenlab/symbols.hpp"
#include "eisenlab/whittaker.hpp"
