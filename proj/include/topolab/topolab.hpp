#pragma once

#include "catalog.hpp"
#include "claims.hpp"
#include "classify.hpp"
#include "enumerate.hpp"
#include "filters.hpp"
#include "properties.hpp"
#include "skel_io.hpp"
#include "skeleton.hpp"
#include "space_ops.hpp"
#include "symbolic.hpp"
#include "topo_io.hpp"
#include "verify.hpp"
