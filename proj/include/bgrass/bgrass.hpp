#pragma once

#include "bgrass/bruhat_graph.hpp"
#include "bgrass/covering.hpp"
#include "bgrass/errors.hpp"
#include "bgrass/grassmannian.hpp"
#include "bgrass/maya.hpp"
#include "bgrass/oracle.hpp"
#include "bgrass/signed_permutation.hpp"
