#pragma once

#include "revfree/binary_matrix.hpp"
#include "revfree/code.hpp"
#include "revfree/constructions.hpp"
#include "revfree/error.hpp"
#include "revfree/exact.hpp"
#include "revfree/field.hpp"
#include "revfree/json_io.hpp"
#include "revfree/pattern.hpp"
#include "revfree/permanent.hpp"
#include "revfree/projective_plane.hpp"
#include "revfree/shrink.hpp"
