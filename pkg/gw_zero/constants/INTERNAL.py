GRAPH_CACHE_FORMAT_VERSION = 1
GRAPH_CACHE_PREFIX = 'graphs'
GRAPH_CACHE_ENV = 'GW_ZERO_CACHE_DIR'

DEFAULT_WEIGHT_SEED = 20240
WEIGHT_RANGE = 1000
WEIGHT_RETRIES = 8

POOL_CHUNK_SIZE = 64
