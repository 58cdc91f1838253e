"""Exact chain-level algebra of simplicial sets: interval cuts, bar constructions,
torus and DJ formality maps, face rings and loop-space homology."""

from .rings import QQ, ZZ, IntegersMod, ring_from_name
from .simplicial import (BarGroup, BaseSpace, ConstantGroup, OrderedComplex, Product,
                         StandardSimplex, TotalSpace, torus, universal_bundle)
from .chains import Chain, aw_diagonal, boundary, shuffle_map
from .surjections import Surjection, differential, interval_cut, nondegenerate_surjections, surjection
from .cochains import Cochain, coboundary, cup, cup1, cup2
from .facering import FaceRing, SimplicialPoset, mayer_vietoris
from .loops import hh_free_loops, resolution_tor, tor_loops
from .torus import Certificate, TorusFormality
from .dj import DJColimit, DJFormality, DJSubobject

__version__ = "0.1.0"
