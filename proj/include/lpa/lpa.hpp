#ifndef LPA_LPA_HPP
#define LPA_LPA_HPP

#include "lpa/algebra.hpp"
#include "lpa/boundary.hpp"
#include "lpa/bruteforce.hpp"
#include "lpa/center.hpp"
#include "lpa/count.hpp"
#include "lpa/cycles.hpp"
#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/invariant_lattice.hpp"
#include "lpa/json.hpp"
#include "lpa/linear_algebra.hpp"
#include "lpa/path_census.hpp"
#include "lpa/report.hpp"
#include "lpa/ring.hpp"
#include "lpa/steinberg.hpp"

#endif  // LPA_LPA_HPP
