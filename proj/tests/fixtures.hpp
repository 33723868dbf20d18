#pragma once

#include <rackbi/corpus.hpp>

namespace fixtures = rackbi::corpus;
