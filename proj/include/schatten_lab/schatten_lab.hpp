#pragma once

#include "schatten_lab/config.hpp"
#include "schatten_lab/report.hpp"
#include "schatten_lab/random.hpp"
#include "schatten_lab/linalg.hpp"
#include "schatten_lab/schatten.hpp"
#include "schatten_lab/majorization.hpp"
#include "schatten_lab/variational.hpp"
#include "schatten_lab/hanner.hpp"
#include "schatten_lab/rearrange.hpp"
#include "schatten_lab/explorer.hpp"
#include "schatten_lab/suites.hpp"
