#pragma once

#include "asymel/errors.hpp"
#include "asymel/export.hpp"
#include "asymel/grid.hpp"
#include "asymel/invariance.hpp"
#include "asymel/laurent.hpp"
#include "asymel/material.hpp"
#include "asymel/material_file.hpp"
#include "asymel/solutions2d.hpp"
#include "asymel/solutions3d.hpp"
#include "asymel/verify.hpp"
#include "asymel/voigt.hpp"
