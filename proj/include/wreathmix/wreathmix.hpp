#pragma once

#include "wreathmix/bounds.hpp"
#include "wreathmix/cli.hpp"
#include "wreathmix/diagrams.hpp"
#include "wreathmix/errors.hpp"
#include "wreathmix/groups.hpp"
#include "wreathmix/montecarlo.hpp"
#include "wreathmix/rational.hpp"
#include "wreathmix/spectrum.hpp"
#include "wreathmix/walk.hpp"
