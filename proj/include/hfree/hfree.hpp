#pragma once

#include "hfree/canonical.hpp"
#include "hfree/constructions.hpp"
#include "hfree/generate.hpp"
#include "hfree/graph.hpp"
#include "hfree/graph_ops.hpp"
#include "hfree/instance.hpp"
#include "hfree/io.hpp"
#include "hfree/named_graphs.hpp"
#include "hfree/pattern_analysis.hpp"
#include "hfree/planner.hpp"
#include "hfree/solver.hpp"
#include "hfree/subgraph_search.hpp"
#include "hfree/verifier.hpp"
