#pragma once

#include "wgcd/bench.hpp"
#include "wgcd/context.hpp"
#include "wgcd/corpus.hpp"
#include "wgcd/factor.hpp"
#include "wgcd/generators.hpp"
#include "wgcd/kernel.hpp"
#include "wgcd/pipeline.hpp"
#include "wgcd/primality.hpp"
#include "wgcd/reductions.hpp"
#include "wgcd/strategies.hpp"
#include "wgcd/tuple.hpp"
