#pragma once

#include "radsurj/bigrat.hpp"
#include "radsurj/degree.hpp"
#include "radsurj/error.hpp"
#include "radsurj/gcd.hpp"
#include "radsurj/groebner.hpp"
#include "radsurj/guilt.hpp"
#include "radsurj/missing.hpp"
#include "radsurj/param.hpp"
#include "radsurj/parser.hpp"
#include "radsurj/poly.hpp"
#include "radsurj/remainder.hpp"
#include "radsurj/resultant.hpp"
#include "radsurj/roots.hpp"
#include "radsurj/sampler.hpp"
#include "radsurj/surjcheck.hpp"
#include "radsurj/tower.hpp"
#include "radsurj/var_table.hpp"
