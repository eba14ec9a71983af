#pragma once

#include "sqk/automorphism.hpp"
#include "sqk/catalog.hpp"
#include "sqk/coset.hpp"
#include "sqk/decomposition.hpp"
#include "sqk/error.hpp"
#include "sqk/group.hpp"
#include "sqk/io.hpp"
#include "sqk/perm.hpp"
#include "sqk/quandle.hpp"
#include "sqk/symmetric.hpp"
