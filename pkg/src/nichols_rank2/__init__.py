"""Rank-two Nichols algebras over non-abelian groups.

Exact arithmetic over cyclotomic and finite fields, Yetter-Drinfeld modules
over finite group images, the adjoint chains (ad V)^m(W), reflections, Weyl
groupoids, Hilbert series and a symmetrizer-rank oracle.
"""

from .adjoint import AdjointChain, Pair, cartan_entry, compute_phi, compute_X, reflect
from .classes import classify_module, classify_pair
from .groups import GroupSpec, gamma2, gamma3, gamma4, make_group, t_group
from .hilbert import HilbertSeries, QuantumFactor, assemble, dimension, series_for_yclass
from .instantiate import CATALOGUE, EXAMPLES, ExampleSpec, instantiate, pair_from_record
from .scalars import Field, field_create, parse_scalar, serialize
from .symmetrizer import BraidedSpace, oracle_hilbert, symmetrizer
from .verify import verify_example, verify_table, verify_yclass
from .weylgroupoid import generate, positive_roots, root_module_assignment
from .ydmod import YDModule, dual, induce, induce_character

__version__ = "0.1.0"
