#pragma once

#include "branchkit/errors.hpp"
#include "branchkit/partition.hpp"
#include "branchkit/lr.hpp"
#include "branchkit/labels.hpp"
#include "branchkit/stable_range.hpp"
#include "branchkit/branching.hpp"
#include "branchkit/laurent.hpp"
#include "branchkit/weyl.hpp"
#include "branchkit/oracle.hpp"
#include "branchkit/duality.hpp"
#include "branchkit/verify.hpp"
