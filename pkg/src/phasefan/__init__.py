"""
Real phase structures on matroid fans.

Builds matroids from rank tables, circuits, bases, graphs or rational matrices,
checks and searches real phase structures on their fans, and translates them to
and from oriented matroids.
"""

from .fan import FanFace, MatroidFan
from .matroid import Matroid
from .oriented import OrientedMatroid, SignVector, phase_to_oriented
from .phase import RealPhaseStructure
from .search import search_phase_structures
from .sources import build_matroid
