#pragma once

#include "meadow/axioms.hpp"
#include "meadow/checker.hpp"
#include "meadow/descriptor.hpp"
#include "meadow/element.hpp"
#include "meadow/models.hpp"
#include "meadow/random_terms.hpp"
#include "meadow/search.hpp"
#include "meadow/syntax.hpp"
#include "meadow/term.hpp"
#include "meadow/translate.hpp"
