#pragma once

#include "crideal/backend.hpp"
#include "crideal/certificate.hpp"
#include "crideal/diagonal.hpp"
#include "crideal/foundation.hpp"
#include "crideal/free_monoid.hpp"
#include "crideal/grid.hpp"
#include "crideal/ideal_engine.hpp"
#include "crideal/lattice.hpp"
#include "crideal/matrix.hpp"
#include "crideal/number_ring.hpp"
#include "crideal/numerical.hpp"
#include "crideal/order_backends.hpp"
#include "crideal/structure.hpp"
#include "crideal/word.hpp"
