"""Mutual witness Gabriel drawings of complete multipartite graphs: decide, construct, search, check."""
from .characterize import Verdict, decide_pair
from .construct import draw_pair
from .geometry import Point, pt
from .model import Drawing, GraphSpec, MwgInstance, induce_mwg, matches_spec

__version__ = "0.1.0"

__all__ = ["Point", "pt", "GraphSpec", "Drawing", "MwgInstance", "induce_mwg", "matches_spec",
           "Verdict", "decide_pair", "draw_pair", "__version__"]
