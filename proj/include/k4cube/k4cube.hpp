#pragma once

#include "k4cube/closed_form.hpp"
#include "k4cube/cube_graph.hpp"
#include "k4cube/oracle.hpp"
#include "k4cube/report.hpp"
