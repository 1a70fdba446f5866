#ifndef BIALT_BIALT_HPP
#define BIALT_BIALT_HPP

#include "bialt/analysis.hpp"
#include "bialt/aut_search.hpp"
#include "bialt/construct.hpp"
#include "bialt/cycles.hpp"
#include "bialt/graph.hpp"
#include "bialt/group.hpp"
#include "bialt/io.hpp"
#include "bialt/maps.hpp"
#include "bialt/params.hpp"
#include "bialt/perm.hpp"
#include "bialt/survey.hpp"
#include "bialt/verify.hpp"

#endif
