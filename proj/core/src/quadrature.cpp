#include "qfent/quadrature.hpp"

// The integrator is header-only (templates); nothing to define here.
