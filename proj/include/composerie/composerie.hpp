#pragma once

#include "composerie/closed_forms.hpp"
#include "composerie/combinatorics.hpp"
#include "composerie/compositions.hpp"
#include "composerie/ring.hpp"
#include "composerie/series.hpp"
#include "composerie/verify.hpp"
#include "composerie/weights.hpp"
