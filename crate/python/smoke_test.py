"""Smoke test for the dnc_recurrence extension module.

Build first with `cargo build -p dnc-py`; the script picks up the shared
library from target/ (or wherever DNC_RECURRENCE_LIB points).
"""

import importlib.util
import os
import shutil
import sys
import tempfile
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    lib = os.environ.get("DNC_RECURRENCE_LIB")
    candidates = [Path(lib)] if lib else [
        ROOT / "target" / profile / "libdnc_recurrence.so" for profile in ("release", "debug")
    ]
    found = next((p for p in candidates if p.exists()), None)
    if found is None:
        sys.exit("libdnc_recurrence.so not found; run `cargo build -p dnc-py`")
    tmp = Path(tempfile.mkdtemp())
    target = tmp / "dnc_recurrence.so"
    shutil.copy(found, target)
    spec = importlib.util.spec_from_file_location("dnc_recurrence", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def direct(a, terms, x1):
    @lru_cache(maxsize=None)
    def x(n):
        if n == 1:
            return x1
        hi, lo = (n + 1) // 2, n // 2
        toll = sum(c * hi**r * lo**t for (r, t), c in terms.items())
        return a * x(hi) + a * x(lo) + toll

    return x


def main():
    dnc = load()

    sackin = dnc.Recurrence(1, "1,0:1;0,1:1", 0)
    assert sackin.solve(7) == 20
    assert sackin.sequence(5) == [0, 2, 5, 8, 12]

    squares = dnc.Recurrence(2, "0,1:1;1,0:-1", 1)
    n = 2**200 + 12345
    assert squares.solve(n) == n * n

    a, x1 = Fraction(-2, 3), Fraction(5, 7)
    terms = {(2, 1): Fraction(1, 2), (0, 0): Fraction(-3)}
    rec = dnc.Recurrence(a, "2,1:1/2;0,0:-3", x1)
    ref = direct(a, terms, x1)
    for k in range(1, 300):
        assert rec.solve(k) == ref(k), k
        assert rec.oracle(k) == ref(k), k
    assert rec.a == a and rec.x1 == x1 and rec.poly == "0,0:-3;2,1:1/2"

    assert dnc.x_rt(1, 0, 8, 1) == 12
    assert "sackin" in dnc.catalog_names()
    assert dnc.catalog_eval("lebesgue", 3) == Fraction(3, 2)
    assert dnc.catalog_recurrence("nsquared").solve(13) == 169

    for bad in (lambda: dnc.Recurrence(0, "1,0:1"), lambda: dnc.Recurrence(1, "1,0:x"),
                lambda: sackin.solve(0), lambda: dnc.catalog_eval("nope", 1)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("dnc_recurrence smoke test passed")


if __name__ == "__main__":
    main()
