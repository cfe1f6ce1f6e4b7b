#pragma once

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/characters.hpp"
#include "hurwitz/content.hpp"
#include "hurwitz/query.hpp"
#include "hurwitz/group_algebra.hpp"
#include "hurwitz/walks.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/toda.hpp"
#include "hurwitz/engine.hpp"
#include "hurwitz/linalg.hpp"
#include "hurwitz/chamber.hpp"
