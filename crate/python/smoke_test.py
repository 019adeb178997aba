"""Smoke test for the `nakayama` Python extension.

Build and run with maturin:
    cd crates/python && maturin develop --release && python ../../python/smoke_test.py
or with cargo:
    cargo build --release -p nakayama-py --features extension-module
    cp target/release/libnakayama.so python/nakayama.so && python python/smoke_test.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import nakayama  # noqa: E402

RUNNING_T = [(1, 1), (1, 3), (3, 3), (1, 5), (5, 6), (6, 6), (6, 7), (7, 9), (9, 10), (10, 10)]
RUNNING_COVERS = [(2, 1), (2, 3), (4, 2), (4, 5), (5, 6), (7, 6), (8, 7), (8, 9), (9, 10)]


def main():
    alg = nakayama.Algebra.parse("10:5,6,7,9")
    assert alg.n == 10 and alg.relations == [5, 6, 7, 9]
    assert alg == nakayama.Algebra(10, [5, 6, 7, 9])
    assert str(alg) == "10:5,6,7,9"
    assert alg.tilt_count() == 266
    assert len(alg.tilting_modules()) == 266
    assert alg.blocks() == [("path", 1, 5), ("bang", 5, 7), ("path", 7, 9), ("path", 9, 10)]

    covers, labels = alg.order_from_tilting(RUNNING_T)
    assert covers == RUNNING_COVERS
    assert alg.char_tilting(covers) == labels
    assert sorted(labels) == sorted(RUNNING_T)
    seq = alg.admissible_sequence(RUNNING_T)
    assert [s["kind"] for s in json.loads(seq)] == ["path", "bang", "path", "path"]
    assert alg.assemble(seq) == (covers, labels)
    assert nakayama.order_dot(10, covers).count(" -> ") == 9

    for n in range(1, 9):
        assert nakayama.Algebra(n).tilt_count() == nakayama.catalan(n)
    bang = nakayama.Algebra(3, [2])
    assert len(bang.tilting_modules("exhaustive")) == 3
    assert bang.tilt_hasse_dot().count(" -> ") == 2
    assert bang.structures() == bang.structures("oracle")
    assert bang.mutate([(1, 2), (2, 3), (3, 3)], (3, 3)) == [(1, 2), (2, 2), (2, 3)]
    path3 = nakayama.Algebra(3)
    fibers = sorted(path3.classify_decomposition(t) for t in path3.tilting_modules())
    assert fibers == [1, 1, 2, 3, 3]

    tree = json.loads(nakayama.tree_of_tilting(5, [(1, 1), (1, 3), (3, 3), (1, 5), (5, 5)]))
    assert tree["label"] == 4 and tree["left"]["label"] == 2 and tree["right"] == {"label": 5}
    assert nakayama.nodal_count(nakayama.Algebra(2), 1, 1) == (4, 2, 1)

    try:
        nakayama.Algebra(1, [2])
    except nakayama.NakayamaError as e:
        assert "RelationOutOfRange" in str(e)
    else:
        raise AssertionError("expected NakayamaError")

    reports = nakayama.verify(max_n=5, jobs=1, criteria=[1, 10])
    assert [r[0] for r in reports] == [1, 10] and all(r[2] for r in reports)
    print("python smoke test passed")


if __name__ == "__main__":
    main()
