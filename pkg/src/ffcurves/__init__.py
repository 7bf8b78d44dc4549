"""Finite-field toolkit for counting irreducible specializations of plane curves.

Submodules: :mod:`field` (GF(p^k)), :mod:`unipoly`, :mod:`bipoly`,
:mod:`curves`, :mod:`census`, :mod:`bateman_horn`, :mod:`parse` and
:mod:`cli`.
"""

from .bateman_horn import IntPoly, bh_prediction, empirical_count, omega, singular_series
from .bipoly import BiPoly, HomForm, resultant
from .census import (
    CensusReport,
    count_irreducible_pairs,
    cycle_type_density,
    factorization_census,
    regular_stabilizer_size,
    swan_scan,
    theorem_c_report,
)
from .curves import (
    CurveReport,
    ProjPoint,
    check_char0like_nodal,
    classify_singularity,
    dual_curve,
    has_finitely_many_bitangents,
    has_finitely_many_inflections,
    is_absolutely_irreducible,
    is_strange,
    singular_points,
)
from .field import FFElem, FieldCtx, embed, make_field
from .parse import ParseError, parse_poly
from .unipoly import UniPoly, factor_type, is_irreducible

__version__ = "0.1.0"
