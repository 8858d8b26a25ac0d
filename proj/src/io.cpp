#include "eadual/io.hpp"
