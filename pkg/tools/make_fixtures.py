"""Regenerate fixtures/ from the builtin catalog.

    python3 tools/make_fixtures.py
"""

import copy
import random
from pathlib import Path

from hopfgen import catalog
from hopfgen.cocycles import BilinearForm, LinearForm, is_lazy
from hopfgen.io import algebra_to_json, form_to_json, linear_to_json, save_json

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    OUT.mkdir(exist_ok=True)
    algebras = {}
    for name in sorted(catalog.ALGEBRAS):
        data = algebra_to_json(catalog.get(name))
        algebras[name] = data
        save_json(data, OUT / f"{name}.json")
    for name, (alg, make) in sorted(catalog.COCYCLES.items()):
        save_json(form_to_json(BilinearForm.of(make())), OUT / f"{name}.json")
    # a convolution-invertible λ on kS3 (values on group elements must be nonzero)
    save_json(linear_to_json(LinearForm.of([1, 2, 3, 5, 7, 11])), OUT / "s3-lambda.json")
    save_json(linear_to_json(LinearForm.of([1, -1, 2, 3])), OUT / "sweedler-lambda.json")

    # first non-lazy form on H4 from a seeded random search, with its witness
    h4 = catalog.get("sweedler")
    rng = random.Random(7)
    while True:
        form = BilinearForm.of([[rng.choice([0, 1, 2, -1]) for _ in range(4)] for _ in range(4)])
        verdict = is_lazy(h4, form)
        if not verdict.ok:
            save_json({**form_to_json(form), "witness": verdict.counterexample["pair"]},
                      OUT / "sweedler-nonlazy.json")
            break

    # corrupted variants, one broken axiom each
    bad = copy.deepcopy(algebras["sweedler"])
    bad["name"] = "H4 with S(x) = gx"
    bad["antipode"][2] = ["0", "0", "0", "1"]
    save_json(bad, OUT / "sweedler-bad-antipode.json")

    bad = copy.deepcopy(algebras["klein4"])
    bad["name"] = "kV4 with eps(b10) = 0"
    bad["counit"][1] = "0"
    save_json(bad, OUT / "klein4-bad-counit.json")

    bad = copy.deepcopy(algebras["kz3"])
    bad["name"] = "kZ3 with a non-coassociative coproduct"
    bad["comult"][1] = [[1, 1, "1"], [0, 1, "1"], [1, 0, "-1"]]
    save_json(bad, OUT / "kz3-bad-comult.json")


if __name__ == "__main__":
    main()
