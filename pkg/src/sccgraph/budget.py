"""Size and search budgets.

``SCCGRAPH_MAX_ORDER`` overrides the default maximum group order.
"""

import os
from dataclasses import dataclass, field

TABLE_LIMIT = 5000
MAX_ORDER = 100_000
SEARCH_NODES = 10**7


def _env_max_order():
    raw = os.environ.get("SCCGRAPH_MAX_ORDER")
    if not raw:
        return MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        return MAX_ORDER
    return value if value > 0 else MAX_ORDER


@dataclass(frozen=True)
class Budget:
    max_order: int = field(default_factory=_env_max_order)
    table_limit: int = TABLE_LIMIT
    search_nodes: int = SEARCH_NODES


def default_budget():
    return Budget()
