#pragma once

#include "modlie/errors.hpp"
#include "modlie/field.hpp"
#include "modlie/matrix.hpp"
#include "modlie/sparse.hpp"
#include "modlie/lie_algebra.hpp"
#include "modlie/module.hpp"
#include "modlie/restricted.hpp"
#include "modlie/meataxe.hpp"
#include "modlie/zassenhaus.hpp"
#include "modlie/cohomology.hpp"
#include "modlie/verify.hpp"
#include "modlie/json_io.hpp"
