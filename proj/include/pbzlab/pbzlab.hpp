#pragma once

#include "pbzlab/error.hpp"
#include "pbzlab/lattice.hpp"
#include "pbzlab/algebra.hpp"
#include "pbzlab/congruence.hpp"
#include "pbzlab/embedding.hpp"
#include "pbzlab/constructions.hpp"
#include "pbzlab/catalog.hpp"
#include "pbzlab/terms.hpp"
#include "pbzlab/classops.hpp"
#include "pbzlab/io.hpp"
#include "pbzlab/verification.hpp"
