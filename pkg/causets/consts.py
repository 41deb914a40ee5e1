# budgets for exact computations
DEFAULT_STATE_BUDGET = 10 ** 7
DEFAULT_STEM_BUDGET = 10 ** 5
DEFAULT_MINIMAL_BUDGET = 64
DEFAULT_ENUMERATION_CAP = 5040
DEFAULT_CHECK_BRANCH = 3
DEFAULT_SIMULATION_BUDGET = 8
DEFAULT_APPEARANCE_HORIZON = 6
MAX_SIMULATION_BUDGET = 2 ** 20

# lazily built families stop searching after this many empty levels
DEFAULT_SCAN_LIMIT = 1024
# double-exponential oscillating growth is capped at this chain length
DEFAULT_CHAIN_CAP = 2 ** 16

# tolerances
FLOAT_TOLERANCE = 1e-12
DEFAULT_TREE_TOLERANCE = 1e-9
MARKING_TOLERANCE = 1e-12
SIGMA_BAND = 5
DEFAULT_ESSENTIALITY_TOL = 0.1

# convergence classification windows
CONVERGENCE_WINDOW = 5
OSCILLATION_WINDOW = 6
OSCILLATION_FACTOR = 10

# replicated simulation
REPLICA_CHUNK = 1000
DEFAULT_WORKERS = 1

# seeds
SEED_ENV_VAR = 'CAUSETS_SEED'
DEFAULT_SEED = 0
