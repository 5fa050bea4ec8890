#pragma once
// Umbrella header: the whole library in one include.

#include "bitset.hpp"
#include "campaigns.hpp"
#include "classes.hpp"
#include "coloring.hpp"
#include "constructions.hpp"
#include "domination.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "io.hpp"
