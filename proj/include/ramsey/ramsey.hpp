#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/edge.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/matrix_text.hpp"
#include "ramsey/params.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/search.hpp"
#include "ramsey/verifier.hpp"
