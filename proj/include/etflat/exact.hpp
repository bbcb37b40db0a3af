#pragma once

#include "etflat/exact/linalg.hpp"
#include "etflat/exact/matrix.hpp"
#include "etflat/exact/rational.hpp"
#include "etflat/exact/surd.hpp"
