#pragma once

#include "mif/adversaries/adversary.hpp"
#include "mif/adversaries/cover.hpp"
#include "mif/algorithms/any_algorithm.hpp"
#include "mif/algorithms/batch_list.hpp"
#include "mif/algorithms/classical.hpp"
#include "mif/algorithms/hidden_list.hpp"
#include "mif/algorithms/params.hpp"
#include "mif/algorithms/pigeonhole.hpp"
#include "mif/algorithms/trivial.hpp"
#include "mif/bits.hpp"
#include "mif/core.hpp"
#include "mif/harness/avoid.hpp"
#include "mif/harness/estimate.hpp"
#include "mif/harness/exact.hpp"
#include "mif/harness/exhaustive.hpp"
#include "mif/harness/play.hpp"
#include "mif/harness/space.hpp"
#include "mif/harness/trials.hpp"
#include "mif/random.hpp"
#include "mif/transcript.hpp"
