#pragma once

// Umbrella header for the whole toolkit.

#include "qsa/capacity.hpp"
#include "qsa/channel.hpp"
#include "qsa/common.hpp"
#include "qsa/eigen.hpp"
#include "qsa/entropy.hpp"
#include "qsa/joint.hpp"
#include "qsa/matrix.hpp"
#include "qsa/random.hpp"
#include "qsa/separability.hpp"
#include "qsa/state.hpp"
#include "qsa/sweep_io.hpp"
#include "qsa/tensor.hpp"
#include "qsa/verify.hpp"
#include "qsa/zoo.hpp"
