"""Search budgets and suite sizes, overridable from a JSON file."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

CONFIG_ENV = "SEMIREP_CONFIG"


@dataclass(frozen=True)
class Caps:
    order_cap: int = 5040
    hom_exhaustive_bits: int = 20
    generator_count_irreducibles: int = 12
    quasi_basis_exhaustive_size: int = 16
    gset_bruteforce_size: int = 6
    module_hom_source_size: int = 8
    module_hom_target_size: int = 4
    invertible_matrix_dim: int = 3
    zero_divisor_exhaustive_order: int = 3
    zero_divisor_samples: int = 10_000
    cyclic_samples: int = 100
    cyclic_max_rank: int = 2
    torsion_samples: int = 1000
    torsion_max_power: int = 12
    random_lattices: int = 40
    hom_table_dim_product: int = 36

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "Caps":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown cap(s): {', '.join(sorted(unknown))}")
        for k, v in data.items():
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"cap {k} must be a nonnegative integer")
        return replace(cls(), **data)


def load_caps(path: str | os.PathLike | None = None) -> Caps:
    """Caps from ``path``, else from the file named by $SEMIREP_CONFIG, else defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV) or None
    if path is None:
        return Caps()
    with open(Path(path), encoding="utf-8") as fh:
        return Caps.from_dict(json.load(fh))
