#ifndef COREP_COREP_HPP
#define COREP_COREP_HPP

#include "corep/algebra.hpp"
#include "corep/coirrep.hpp"
#include "corep/group_core.hpp"
#include "corep/infinitesimal.hpp"
#include "corep/linalg.hpp"
#include "corep/numdiff.hpp"
#include "corep/types.hpp"

#endif // COREP_COREP_HPP
