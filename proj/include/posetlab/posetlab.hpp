#pragma once

#include "posetlab/error.hpp"
#include "posetlab/explicit_poset.hpp"
#include "posetlab/incidence.hpp"
#include "posetlab/io.hpp"
#include "posetlab/linalg.hpp"
#include "posetlab/number_theory.hpp"
#include "posetlab/order.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/scalar.hpp"
#include "posetlab/transforms.hpp"
#include "posetlab/uncertainty.hpp"
