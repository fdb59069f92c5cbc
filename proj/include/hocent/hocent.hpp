#pragma once

#include "hocent/common.hpp"
#include "hocent/detrand.hpp"
#include "hocent/graph.hpp"
#include "hocent/io.hpp"
#include "hocent/link_prediction.hpp"
#include "hocent/measures.hpp"
#include "hocent/power_mean.hpp"
#include "hocent/solver.hpp"
#include "hocent/synthetic.hpp"
#include "hocent/tensor.hpp"
#include "hocent/triangles.hpp"
