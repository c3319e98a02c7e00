#pragma once

#include "modtheta/exact/bernoulli.hpp"
#include "modtheta/exact/dedekind.hpp"
#include "modtheta/exact/eta_character.hpp"
#include "modtheta/exact/integer.hpp"
#include "modtheta/exact/phase.hpp"
#include "modtheta/exact/rational.hpp"
#include "modtheta/modular/matrix.hpp"
#include "modtheta/numeric.hpp"
#include "modtheta/series/config.hpp"
#include "modtheta/series/eta.hpp"
#include "modtheta/series/fourier.hpp"
#include "modtheta/series/lambda.hpp"
#include "modtheta/series/theta1.hpp"
#include "modtheta/verify/checks.hpp"
#include "modtheta/verify/report.hpp"
#include "modtheta/verify/sampling.hpp"
#include "modtheta/verify/suite.hpp"
