# Root index of every tableau
ROOT_INDEX = 1

# Rule ranks, applied lowest first
RANK_LINEAR = 0
RANK_BRANCHING = 1
RANK_GENERATIVE = 2
RANK_NONANALYTIC = 3

# Justification of the assumption node
ASSUMPTION_RULE = 'Ass'

# Verdict statuses
STATUS_CLOSED = 'closed'
STATUS_OPEN = 'open'
STATUS_RESOURCE_OUT = 'resource_out'

# Exit codes shared by the management commands
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3

# Limit names reported by ResourceOut
LIMIT_NODES = 'max_nodes'
LIMIT_INDICES = 'max_indices'
LIMIT_DEPTH = 'max_depth'
