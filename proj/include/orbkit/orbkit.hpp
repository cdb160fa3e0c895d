// Umbrella header.

#ifndef ORBKIT_ORBKIT_HPP_
#define ORBKIT_ORBKIT_HPP_

#include "orbkit/coset_table.hpp"
#include "orbkit/covers.hpp"
#include "orbkit/low_index.hpp"
#include "orbkit/parser.hpp"
#include "orbkit/smith.hpp"
#include "orbkit/surgery.hpp"
#include "orbkit/todd_coxeter.hpp"
#include "orbkit/verify.hpp"
#include "orbkit/word.hpp"

#endif  // ORBKIT_ORBKIT_HPP_
