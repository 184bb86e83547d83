"""Smoke test for the tlimm extension module.

Build first with `cargo build -p tlimm-py`; the script copies the shared
library next to itself as tlimm.so if it is not importable yet.
"""

import pathlib
import shutil
import sys

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent


def locate():
    for profile in ("release", "debug"):
        lib = ROOT / "target" / profile / "libtlimm_py.so"
        if lib.exists():
            return lib
    sys.exit("libtlimm_py.so not found; run `cargo build -p tlimm-py` first")


try:
    import tlimm
except ImportError:
    shutil.copy(locate(), HERE / "tlimm.so")
    sys.path.insert(0, str(HERE))
    import tlimm


def main():
    r = tlimm.SkewShape("3,2,2/1,1")
    assert r.is_ribbon() and r.size() == 5
    assert r.ribbon_descents() == [2, 3]
    assert str(tlimm.SkewShape("2,2,2").conjugate()) == "3,3"

    s1, s2 = tlimm.Permutation.simple(1, 3), tlimm.Permutation.simple(2, 3)
    assert (s1 * s2).one_line() == [3, 1, 2]
    assert len(tlimm.KauffmanDiagram.enumerate(4)) == 14

    b = tlimm.GroupAlgebraElement
    assert b.b_of([1, 2], 3).star(b.b_of([2], 3)) == b.b_of([2], 3)
    theta = dict((str(d), c) for d, c in b.basis(s1).theta())
    assert theta == {"1": -1, "t1": 1}

    terms = tlimm.expand("2,2,2;2,2,2", basis="s")
    assert any(c < 0 for _, c in terms), "expected a negative Schur coefficient"

    ids = [c[0] for c in tlimm.list_checks()]
    assert "negative-beta" in ids and len(ids) == 15
    report = tlimm.run_check("negative-beta")
    assert report["failed"] == 0 and report["instances"][0]["witness"]["sign"] == -1
    report = tlimm.run_check("thm-1-4", m=4)
    assert report["passed"] == 8 and report["failed"] == 0

    try:
        tlimm.run_check("no-such-check")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown check accepted")
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
