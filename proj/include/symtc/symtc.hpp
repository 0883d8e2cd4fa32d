#pragma once

#include "symtc/certificate.hpp"
#include "symtc/complex.hpp"
#include "symtc/complexity.hpp"
#include "symtc/constructions.hpp"
#include "symtc/cover.hpp"
#include "symtc/errors.hpp"
#include "symtc/homotopy.hpp"
#include "symtc/io.hpp"
#include "symtc/permutation.hpp"
#include "symtc/poset.hpp"
#include "symtc/relation.hpp"
#include "symtc/run.hpp"
#include "symtc/section.hpp"
#include "symtc/stabilize.hpp"
#include "symtc/symmetry.hpp"
#include "symtc/validate.hpp"
