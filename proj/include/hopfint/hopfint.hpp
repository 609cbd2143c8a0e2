#pragma once

#include "hopfint/scalar.hpp"
#include "hopfint/matrix.hpp"
#include "hopfint/hopf_algebra.hpp"
#include "hopfint/catalog.hpp"
#include "hopfint/comodule.hpp"
#include "hopfint/convolution.hpp"
#include "hopfint/monoidal.hpp"
#include "hopfint/integrals.hpp"
#include "hopfint/gp_functors.hpp"
#include "hopfint/serialization.hpp"
#include "hopfint/suite.hpp"
