#pragma once

#include "plasmon/bie.hpp"
#include "plasmon/charpoly.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/field.hpp"
#include "plasmon/geometry.hpp"
#include "plasmon/io.hpp"
#include "plasmon/linalg.hpp"
#include "plasmon/materials.hpp"
#include "plasmon/npcore.hpp"
#include "plasmon/presets.hpp"
#include "plasmon/spectrum.hpp"
