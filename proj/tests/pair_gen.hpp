#pragma once

#include "dls/generators.hpp"

namespace dls {
namespace testgen = gen;
}
