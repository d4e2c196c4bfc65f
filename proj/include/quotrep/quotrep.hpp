#pragma once

#include "quotrep/classify.hpp"
#include "quotrep/group.hpp"
#include "quotrep/numeric.hpp"
#include "quotrep/parse.hpp"
#include "quotrep/quotcone.hpp"
#include "quotrep/reps.hpp"
#include "quotrep/root_system.hpp"
#include "quotrep/tensor.hpp"
#include "quotrep/weight.hpp"
#include "quotrep/weyl.hpp"
