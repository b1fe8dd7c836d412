#pragma once

#include "s2sym/autos.hpp"
#include "s2sym/discrete.hpp"
#include "s2sym/errors.hpp"
#include "s2sym/extension.hpp"
#include "s2sym/integer.hpp"
#include "s2sym/intmat.hpp"
#include "s2sym/liegroup.hpp"
#include "s2sym/symmetry.hpp"
