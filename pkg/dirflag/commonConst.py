# commonConst.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# ---------------------------------------------------------

import math

INF = math.inf

# digraph / simplicial morphism classes (ordered by strength)
MAP_NOT_WEAK = 0
MAP_WEAK = 1
MAP_TRIANGLE_COLLAPSING = 2
MAP_STRONG = 3

MAP_CLASS_NAMES = {MAP_NOT_WEAK: "NotWeak",
                   MAP_WEAK: "Weak",
                   MAP_TRIANGLE_COLLAPSING: "TriangleCollapsing",
                   MAP_STRONG: "Strong"}

# one-step homotopy systems
SYSTEM_A = 1
SYSTEM_DFL = 2

SYSTEM_NAMES = {SYSTEM_A: "A", SYSTEM_DFL: "dfl"}

# complexes built from a digraph
COMPLEX_DFL = "dfl"
COMPLEX_ALLOWED = "allowed"

# multi-step search outcome
SEARCH_FOUND = "found"
SEARCH_ABSENT = "absent"
SEARCH_INCONCLUSIVE = "inconclusive"

RATIONALS = 0           # field characteristic of Q

# fields of an edge-list row
EDGE_SEPARATOR = r"[,\s]+"

# entrance time of the edges of G in the grounded pipeline
GROUNDING_TIME = 0

# exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3

THREADS_VARIABLE = "DIRFLAG_THREADS"
