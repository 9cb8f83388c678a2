#pragma once
#include "fourier.hpp"
#include "hyperfun.hpp"
#include "paraboson.hpp"
#include "rep_algebra.hpp"
#include "report.hpp"
#include "spectral.hpp"
#include "tailsum.hpp"
#include "wavefun.hpp"
