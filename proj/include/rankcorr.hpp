#pragma once

#include "rankcorr/bundled_table.hpp"
#include "rankcorr/coefficients.hpp"
#include "rankcorr/distribution.hpp"
#include "rankcorr/errors.hpp"
#include "rankcorr/estimator.hpp"
#include "rankcorr/permutation.hpp"
#include "rankcorr/random.hpp"
#include "rankcorr/recsys.hpp"
#include "rankcorr/regression.hpp"
#include "rankcorr/standardizer.hpp"
#include "rankcorr/table.hpp"
