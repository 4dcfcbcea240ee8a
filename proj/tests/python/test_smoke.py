# SPDX-License-Identifier: MIT
"""Smoke test for the _legaug python module.

Run either through ctest (LEGAUG_MODULE_DIR points at the built module) or
after `pip install` (the installed package is picked up from sys.path).
"""

import json
import os
import sys

module_dir = os.environ.get("LEGAUG_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

import _legaug as lg  # noqa: E402

data_dir = os.environ.get("LEGAUG_DATA_DIR") or os.path.join(
    os.path.dirname(__file__), "..", "..", "data"
)


def read(name):
    with open(os.path.join(data_dir, name)) as f:
        return f.read()


def main():
    # Plat round trip and classical invariants.
    trefoil = lg.parse_plat(read("trefoil.plat"))
    assert trefoil.n == 4 and trefoil.crossings == [2, 2, 2]
    assert lg.parse_plat(str(trefoil)).crossings == [2, 2, 2]
    inv = lg.classical_invariants(trefoil)
    assert inv["components"] == 1 and inv["tb"] == 1 and inv["rotation"] == [0]

    # DGA assembly, structural check, JSON round trip.
    dga = lg.assemble(trefoil)
    assert dga.ring == "Z"
    names = [g["name"] for g in dga.generators()]
    assert {"a1", "a2", "a3", "c1", "c2", "t1"} <= set(names)
    ok, report = lg.check_dga(dga)
    assert ok, report
    text = dga.to_json()
    json.loads(text)  # valid JSON
    back = lg.Dga.from_json(text)
    assert back.to_json() == text

    # m-copy.
    two = lg.build_mcopy(dga, 2)
    assert lg.check_dga(two)[0]

    # Augmentation category over F2: five augmentations, trefoil tables.
    cat = lg.AugCategory(dga, "Fp:2")
    augs = cat.augmentations()
    assert len(augs) == 5
    e1 = augs[2]  # (a1, a2, a3) = (1, 0, 0)
    e2 = augs[3]  # (1, 1, 0)
    assert (e1["a1"], e1["a2"], e1["a3"]) == (1, 0, 0)
    assert cat.cohomology("plus", e1, e1) == {0: 1, 1: 2}
    assert cat.cohomology("minus", e1, e1) == {1: 2, 2: 1}
    assert cat.cohomology("plus", e1, e2) == {1: 1}
    assert cat.isomorphic(e1, e1) and not cat.isomorphic(e1, e2)

    # The unit is strict: m2(unit, f) == f.
    unit = cat.unit()
    f = {"a1+": 1}
    assert cat.mk("plus", [e1, e2, e2], [unit, f]) == f
    assert cat.mk("plus", [e1, e1, e2], [f, unit]) == f

    # Slice/Morse-complex equivalence verifier.
    ok, report = lg.verify_slice_equivalences(4, [1, 0, 0, -1], 5, "Fp:3")
    assert ok, report

    print("python smoke: ok")


if __name__ == "__main__":
    main()
