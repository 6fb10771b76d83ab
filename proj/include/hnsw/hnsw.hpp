#pragma once

#include "hnsw/bench.hpp"
#include "hnsw/dataset.hpp"
#include "hnsw/distance.hpp"
#include "hnsw/index.hpp"
#include "hnsw/neighbor.hpp"
#include "hnsw/oracle.hpp"
#include "hnsw/select.hpp"
#include "hnsw/storage.hpp"
#include "hnsw/vecs_io.hpp"
