#pragma once

#include "weak_tape.hpp"
#include "rule110.hpp"
#include "turing.hpp"
#include "machines.hpp"
#include "golden_traces.hpp"
#include "harness.hpp"
#include "render.hpp"
