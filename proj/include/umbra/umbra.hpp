#pragma once

#include "umbra/rational.hpp"
#include "umbra/combinatorics.hpp"
#include "umbra/core.hpp"
#include "umbra/poly.hpp"
#include "umbra/exact.hpp"
#include "umbra/spectral.hpp"
#include "umbra/lattice.hpp"
#include "umbra/evolution.hpp"
#include "umbra/catalog.hpp"
#include "umbra/io.hpp"
