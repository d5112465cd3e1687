"""Exact quasisymmetric powersum bases and their Hopf structure.

Submodules: ``orders``, ``combinat``, ``fillings``, ``ribbon``, ``qsym``,
``nsym``, ``ncqsym``, ``checks`` and the ``cli`` front end.
"""

from .orders import DESC, DTILDE, EVENODD, MED, MIN_ORDER, NATURAL, IntOrder, SetOrder, int_order, lift, set_order
from .qsym import E, F, M, P, Pt, QsymElement
from .nsym import S, Z, NsymElement
from .ncqsym import Mn, Pn, NcqElement, fqsym_G

__version__ = "0.1.0"

__all__ = [
    "DESC", "DTILDE", "EVENODD", "MED", "MIN_ORDER", "NATURAL", "IntOrder", "SetOrder",
    "int_order", "lift", "set_order",
    "E", "F", "M", "P", "Pt", "QsymElement", "S", "Z", "NsymElement",
    "Mn", "Pn", "NcqElement", "fqsym_G",
]
