#pragma once

// Everything except report_io.hpp, which needs nlohmann/json on the include path.

#include "abcgg/bound_suite.hpp"
#include "abcgg/bounds.hpp"
#include "abcgg/constructions.hpp"
#include "abcgg/edge_list.hpp"
#include "abcgg/error.hpp"
#include "abcgg/families.hpp"
#include "abcgg/formulas.hpp"
#include "abcgg/graph.hpp"
#include "abcgg/indices.hpp"
#include "abcgg/random.hpp"
#include "abcgg/shapes.hpp"
#include "abcgg/verification.hpp"
