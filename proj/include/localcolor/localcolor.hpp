#ifndef LOCALCOLOR_LOCALCOLOR_HPP
#define LOCALCOLOR_LOCALCOLOR_HPP

#include "localcolor/ball.hpp"
#include "localcolor/checker.hpp"
#include "localcolor/coloring.hpp"
#include "localcolor/constructions.hpp"
#include "localcolor/experiments.hpp"
#include "localcolor/gnp.hpp"
#include "localcolor/graph.hpp"
#include "localcolor/json_io.hpp"
#include "localcolor/reveal.hpp"
#include "localcolor/rng.hpp"
#include "localcolor/stats.hpp"

#endif
