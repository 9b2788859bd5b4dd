#pragma once

#include <gmpxx.h>

namespace bigraft {

using Scalar = mpz_class;

}  // namespace bigraft
