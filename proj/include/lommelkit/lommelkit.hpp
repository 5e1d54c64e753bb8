#pragma once

#include "lommelkit/continuation.hpp"
#include "lommelkit/errors.hpp"
#include "lommelkit/function_id.hpp"
#include "lommelkit/interlace.hpp"
#include "lommelkit/lommel.hpp"
#include "lommelkit/parallel.hpp"
#include "lommelkit/report_io.hpp"
#include "lommelkit/special_eval.hpp"
#include "lommelkit/zeros.hpp"
