#pragma once

#include "globop/coend.hpp"
#include "globop/collections.hpp"
#include "globop/contraction.hpp"
#include "globop/core.hpp"
#include "globop/globular.hpp"
#include "globop/io.hpp"
#include "globop/pasting.hpp"
#include "globop/presentation.hpp"
#include "globop/term.hpp"
#include "globop/tree.hpp"
