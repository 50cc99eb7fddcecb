#pragma once

#include "dempoly/demazure.hpp"
#include "dempoly/errors.hpp"
#include "dempoly/formal.hpp"
#include "dempoly/json.hpp"
#include "dempoly/numeric.hpp"
#include "dempoly/polysum.hpp"
#include "dempoly/report.hpp"
#include "dempoly/rootsys.hpp"
#include "dempoly/weight.hpp"
#include "dempoly/weyl.hpp"
