#pragma once

// Umbrella header: the whole library.

#include <komino/bijection.hpp>
#include <komino/cli.hpp>
#include <komino/count.hpp>
#include <komino/enumerate.hpp>
#include <komino/exact.hpp>
#include <komino/hyperid.hpp>
#include <komino/serial.hpp>
#include <komino/series.hpp>
#include <komino/tower.hpp>
#include <komino/verify.hpp>
