# __init__.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Homology, homotopy and persistence of directed flag complexes
# ---------------------------------------------------------

__version__ = "0.1.0"
