#pragma once

/// Umbrella header for the absirr library.

#include "absirr/certificate.hpp"
#include "absirr/criteria.hpp"
#include "absirr/error.hpp"
#include "absirr/gcd.hpp"
#include "absirr/gf.hpp"
#include "absirr/graded.hpp"
#include "absirr/oracle.hpp"
#include "absirr/parser.hpp"
#include "absirr/polynomial.hpp"
#include "absirr/random.hpp"
#include "absirr/semigroup.hpp"
#include "absirr/soundness.hpp"
