#pragma once

#include "schottky/classify.hpp"
#include "schottky/coding.hpp"
#include "schottky/concentration.hpp"
#include "schottky/config.hpp"
#include "schottky/errors.hpp"
#include "schottky/family.hpp"
#include "schottky/group.hpp"
#include "schottky/hyperbolic.hpp"
#include "schottky/pipeline.hpp"
#include "schottky/render.hpp"
#include "schottky/report.hpp"
#include "schottky/sequence.hpp"
#include "schottky/word.hpp"
