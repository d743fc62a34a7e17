#pragma once

#include "fleetopt/instance.hpp"
#include "fleetopt/solution.hpp"

namespace fleetopt {

/// Deterministic emulation of the incumbent scheduling practice used as the
/// traversal-reduction reference: each job goes to the vehicle with the
/// nearest depot (spilling to the next-nearest while a depot's accumulated
/// service time is at or above S/n_vehicles); each vehicle drives to its
/// furthest job first and works its way back by nearest neighbour; jobs with
/// time windows are then repositioned to the earliest slot in the route where
/// the simulation actually services them, when such a slot exists. The
/// baseline may still miss jobs; it is reported as-is.
Solution company_baseline(const Instance& instance);

}  // namespace fleetopt
