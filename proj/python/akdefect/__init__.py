"""Python bindings for the akdefect library."""

import json as _json

from . import _akdefect
from ._akdefect import (
    BadSpecialisation,
    Error,
    InexactDivision,
    InvalidArgument,
    InvariantViolation,
    ParseError,
    beta_numbers,
    charged_hooks,
    core,
    defect_general,
    defect_integer,
    dm_classes,
    fayers_weight,
    multipartitions,
    normalize,
    residue_vector,
    schur_string,
    sigma,
    specialize_integer,
    uglov_weight,
    yokonuma_defect,
)


def schur_factors(mp):
    return _json.loads(_akdefect.schur_factors(mp))


def scan(l, n, e, charge, jobs=1, p=None):
    return _json.loads(_akdefect.scan(l, n, e, list(charge), jobs, p))


__all__ = [name for name in dir() if not name.startswith("_")]
