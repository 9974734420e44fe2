#pragma once

#include "lrtab/errors.hpp"
#include "lrtab/shapes.hpp"
#include "lrtab/tableaux.hpp"
#include "lrtab/jdt.hpp"
#include "lrtab/coplactic.hpp"
#include "lrtab/lr.hpp"
#include "lrtab/polyoracle.hpp"
#include "lrtab/io.hpp"
