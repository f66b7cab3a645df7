#pragma once

#include "charlab/errors.hpp"
#include "charlab/permutation.hpp"
#include "charlab/group.hpp"
#include "charlab/subgroups.hpp"
#include "charlab/conjugacy.hpp"
#include "charlab/quotient.hpp"
#include "charlab/isomorphism.hpp"
#include "charlab/cyclotomic.hpp"
#include "charlab/gfp.hpp"
#include "charlab/char_table.hpp"
#include "charlab/char_props.hpp"
#include "charlab/verifiers.hpp"
#include "charlab/smallfield.hpp"
#include "charlab/recipes.hpp"
#include "charlab/group_file.hpp"
#include "charlab/report.hpp"
