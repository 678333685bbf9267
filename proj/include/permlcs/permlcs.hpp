#pragma once

// Umbrella header.

#include "permlcs/algebraic.hpp"
#include "permlcs/bounds.hpp"
#include "permlcs/codes.hpp"
#include "permlcs/hadamard.hpp"
#include "permlcs/io.hpp"
#include "permlcs/number_theory.hpp"
#include "permlcs/parallel.hpp"
#include "permlcs/permutation.hpp"
#include "permlcs/subsequence.hpp"
