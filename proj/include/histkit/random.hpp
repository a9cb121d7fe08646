#pragma once

#include <random>

#include "histkit/measurement.hpp"
#include "histkit/qcore.hpp"

namespace histkit::rnd {

using Engine = std::mt19937_64;

double uniform(Engine& rng, double lo, double hi);
Axis axis(Engine& rng);
Ket ket(Engine& rng, Qubit q);
cplx phase(Engine& rng);
// Random Hermitian matrix with unit-normal entries.
Matrix hermitian(Engine& rng, std::size_t n);
// Random density matrix with full rank over the given labels.
Op density(Engine& rng, const Labels& labels);

}  // namespace histkit::rnd
