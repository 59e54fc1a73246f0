#pragma once

#include "cherednik/bridge.hpp"
#include "cherednik/canonical.hpp"
#include "cherednik/characters.hpp"
#include "cherednik/crystal.hpp"
#include "cherednik/cyclotomic.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/fock.hpp"
#include "cherednik/kgroup.hpp"
#include "cherednik/kl_oracle.hpp"
#include "cherednik/laurent.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/params.hpp"
#include "cherednik/partition.hpp"
#include "cherednik/scalar.hpp"
