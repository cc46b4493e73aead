#pragma once

#include <toriglue/betti.hpp>
#include <toriglue/binomial.hpp>
#include <toriglue/gluing.hpp>
#include <toriglue/graph.hpp>
#include <toriglue/groebner.hpp>
#include <toriglue/linalg.hpp>
#include <toriglue/matrix.hpp>
#include <toriglue/ring.hpp>
#include <toriglue/toric.hpp>
#include <toriglue/transform.hpp>
