"""Sequential convergences and topologies on finite Boolean algebras."""

import json as _json

from ._convlab import *  # noqa: F401,F403
from ._convlab import build_diagram as _build_diagram


def diagram_json(atoms):
    """The diagram report for P(atoms) as a parsed JSON document."""
    return _json.loads(_build_diagram(Carrier(atoms)).emit("json"))  # noqa: F405
