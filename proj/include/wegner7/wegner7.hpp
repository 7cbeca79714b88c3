#pragma once

#include "wegner7/error.hpp"
#include "wegner7/simple_graph.hpp"
#include "wegner7/planar_graph.hpp"
#include "wegner7/structure.hpp"
#include "wegner7/planarity.hpp"
#include "wegner7/cycles.hpp"
#include "wegner7/precolor.hpp"
#include "wegner7/coloring.hpp"
#include "wegner7/decomposition.hpp"
#include "wegner7/oracle.hpp"
#include "wegner7/generators.hpp"
#include "wegner7/pipeline.hpp"
#include "wegner7/io.hpp"
