#pragma once

// Umbrella header for the edge-adaptive DCT codec.

#include "edc/bitio.hpp"
#include "edc/bitstream.hpp"
#include "edc/canny.hpp"
#include "edc/codec.hpp"
#include "edc/colorspace.hpp"
#include "edc/dct.hpp"
#include "edc/huffman.hpp"
#include "edc/image.hpp"
#include "edc/metrics.hpp"
#include "edc/ppm.hpp"
#include "edc/quant.hpp"
#include "edc/scheme.hpp"
