#pragma once

// Everything: surfaces, curves, graphs, witnesses, paths, audits, and I/O.

#include "audit.hpp"
#include "base.hpp"
#include "cli.hpp"
#include "complement.hpp"
#include "curve.hpp"
#include "distance.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "named.hpp"
#include "overlay.hpp"
#include "surface.hpp"
#include "survival.hpp"
#include "twist.hpp"
#include "witness.hpp"
#include "word.hpp"
