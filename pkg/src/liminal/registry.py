"""Named example inputs: weight systems and dual-complex files."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from typing import Union

from .core import WeightSystem
from .diagonal import enumerate_diagonal_liminal
from .dualcx import DualComplexData

Entry = Union[WeightSystem, DualComplexData]

_PATTERNS = {
    "fermat-cone-n": lambda n: WeightSystem([1] * (n + 1), n + 1),
    "odp-n": lambda n: WeightSystem([1] * (n + 1), 2),
}
_LISTED_N = range(1, 9)


def _dual_complex_files() -> dict[str, DualComplexData]:
    out = {}
    root = resources.files("liminal") / "data"
    for item in sorted(root.iterdir(), key=lambda p: p.name):
        if item.name.endswith(".json"):
            out[item.name[:-5]] = DualComplexData.from_dict(json.loads(item.read_text()))
    return out


@dataclass
class ExampleRegistry:
    entries: dict[str, Entry]

    @classmethod
    def default(cls) -> ExampleRegistry:
        entries: dict[str, Entry] = {}
        for prefix, make in _PATTERNS.items():
            for n in _LISTED_N:
                entries[f"{prefix}{n}"] = make(n)
        entries["reid-1-1-2-4-8"] = WeightSystem([1, 1, 2, 4], 8)
        for fam in enumerate_diagonal_liminal(3):
            entries["diagonal-" + "-".join(map(str, fam.exponents))] = fam.weight_system
        entries.update(_dual_complex_files())
        return cls(entries)

    def get(self, label: str) -> Entry:
        if label in self.entries:
            return self.entries[label]
        for prefix, make in _PATTERNS.items():
            m = re.fullmatch(re.escape(prefix) + r"(\d+)", label)
            if m and int(m.group(1)) >= 1:
                return make(int(m.group(1)))
        raise KeyError(label)

    def verify(self) -> list[str]:
        """Labels whose entry fails its module checks (empty when healthy)."""
        from .milnor import milnor_number, poincare_polynomial

        bad = []
        for label, entry in self.entries.items():
            if isinstance(entry, WeightSystem):
                try:
                    if poincare_polynomial(entry).milnor_number != milnor_number(entry):
                        bad.append(label)
                except Exception:
                    bad.append(label)
        return bad

    def describe(self, label: str) -> str:
        entry = self.entries[label]
        if isinstance(entry, WeightSystem):
            return f"weights {entry}"
        return f"dual complex, {len(entry.components)} components, n = {entry.n}"
