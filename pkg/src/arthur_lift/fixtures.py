"""Regenerate the shipped JSON fixtures from the q-expansion oracle."""

from __future__ import annotations

import json
from pathlib import Path

from .lfunctions.qexp import EIGENFORM_WEIGHTS, NAMES, eigenform_hecke_data
from .lifting import evaluate_lift, ibukiyama1, ikeda, miyawaki1, miyawaki2

PRIME_BOUND = 100


def eigenform_fixtures() -> dict[str, dict]:
    out = {}
    for w in EIGENFORM_WEIGHTS:
        name = "delta" if w == 12 else NAMES[w]
        out[f"{name}.json"] = eigenform_hecke_data(w, PRIME_BOUND).to_json()
    return out


def parameter_fixtures() -> dict[str, dict]:
    out = {}
    for fname, spec in [
        ("miyawaki1.json", miyawaki1(12)),
        ("miyawaki2.json", miyawaki2(14)),
        ("ikeda_delta_d2.json", ikeda(12, 2)),
        ("ibukiyama1.json", ibukiyama1(2, 6)),
    ]:
        res = evaluate_lift(spec)
        out[fname] = {"name": spec.name, **res.psi.to_json(), "k": list(res.k_prime)}
    return out


def all_fixtures() -> dict[str, dict]:
    return {**eigenform_fixtures(), **parameter_fixtures()}


def write_fixtures(directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, obj in all_fixtures().items():
        path = directory / name
        path.write_text(json.dumps(obj, indent=2) + "\n")
        written.append(path)
    return written


if __name__ == "__main__":
    for path in write_fixtures(Path(__file__).parent / "data"):
        print(path)
