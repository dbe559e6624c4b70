#pragma once

#include "tanglekit/integer.hpp"
#include "tanglekit/slope.hpp"
#include "tanglekit/continued_fraction.hpp"
#include "tanglekit/unimodular.hpp"
#include "tanglekit/pair_class.hpp"
#include "tanglekit/plat.hpp"
#include "tanglekit/rsr.hpp"
#include "tanglekit/two_bridge.hpp"
#include "tanglekit/lens.hpp"
