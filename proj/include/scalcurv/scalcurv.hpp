#pragma once

// Umbrella header.

#include "scalcurv/bernoulli.hpp"
#include "scalcurv/cobordism.hpp"
#include "scalcurv/errors.hpp"
#include "scalcurv/genus.hpp"
#include "scalcurv/manifest.hpp"
#include "scalcurv/manifold.hpp"
#include "scalcurv/partition.hpp"
#include "scalcurv/partition_polynomial.hpp"
#include "scalcurv/rational.hpp"
#include "scalcurv/report.hpp"
#include "scalcurv/validation.hpp"
