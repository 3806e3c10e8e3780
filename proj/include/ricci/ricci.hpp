#pragma once

// Umbrella header: pulls in the whole library.

#include "ricci/curvature.hpp"
#include "ricci/digraph.hpp"
#include "ricci/errors.hpp"
#include "ricci/generators.hpp"
#include "ricci/io.hpp"
#include "ricci/markov.hpp"
#include "ricci/products.hpp"
#include "ricci/rational.hpp"
#include "ricci/report.hpp"
#include "ricci/rigidity.hpp"
#include "ricci/selfcheck.hpp"
#include "ricci/simplex.hpp"
#include "ricci/spectral.hpp"
#include "ricci/transport.hpp"
