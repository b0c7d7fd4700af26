#pragma once

#include "monoglue/errors.hpp"
#include "monoglue/fourier.hpp"
#include "monoglue/glue.hpp"
#include "monoglue/hodge.hpp"
#include "monoglue/json_io.hpp"
#include "monoglue/linalg.hpp"
#include "monoglue/matrix.hpp"
#include "monoglue/polynomial.hpp"
#include "monoglue/rational.hpp"
#include "monoglue/rng.hpp"
#include "monoglue/selftest.hpp"
#include "monoglue/sheaf.hpp"
