#pragma once

#include "hookchar/characters.hpp"
#include "hookchar/common.hpp"
#include "hookchar/identities.hpp"
#include "hookchar/partition.hpp"
#include "hookchar/tableaux.hpp"
#include "hookchar/tensor_sim.hpp"
