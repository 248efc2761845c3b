#pragma once

#include "gieseker/exactalg.hpp"
#include "gieseker/partitions.hpp"
#include "gieseker/symfunc.hpp"
#include "gieseker/characters.hpp"
#include "gieseker/parking.hpp"
#include "gieseker/format.hpp"
#include "gieseker/verify.hpp"
