#pragma once

#include "giryq/error.hpp"
#include "giryq/format.hpp"
#include "giryq/kernel.hpp"
#include "giryq/laws.hpp"
#include "giryq/lp.hpp"
#include "giryq/measure.hpp"
#include "giryq/predicate.hpp"
#include "giryq/quantifiers.hpp"
#include "giryq/random.hpp"
#include "giryq/rational.hpp"
#include "giryq/scenario.hpp"
