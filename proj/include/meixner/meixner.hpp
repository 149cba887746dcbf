#ifndef MEIXNER_MEIXNER_HPP
#define MEIXNER_MEIXNER_HPP

#include "meixner/cumulants.hpp"
#include "meixner/jacobi.hpp"
#include "meixner/meixner_series.hpp"
#include "meixner/operators.hpp"
#include "meixner/ops_basis.hpp"
#include "meixner/params.hpp"
#include "meixner/partitions.hpp"
#include "meixner/poly.hpp"
#include "meixner/quadrature.hpp"
#include "meixner/scalar.hpp"
#include "meixner/series.hpp"
#include "meixner/verify.hpp"

#endif
