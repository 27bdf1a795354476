"""Smoke test for the pythreearc extension module.

Build and install the module first, for example with
`maturin develop -m crates/py/Cargo.toml --features extension-module`,
then run `python python/smoke_test.py`.
"""

import json

import pythreearc as t


def main():
    g = t.cycle(3)
    x, labels = t.three_arc_graph(g)
    assert (x.order, x.size) == (6, 3), x
    assert len(labels) == 6

    bowtie = t.two_cliques(3, 3)
    assert t.gamma_exact(bowtie) == (1, [2])
    plan = json.loads(t.dominate_x(bowtie, "clawfree"))
    assert plan["size"] == 4 and plan["verified"]

    assert t.theorem3_bound(t.friendship(2)) == "4"

    h = t.petersen()
    cert = t.derive_certificate(h)
    xh, _ = t.three_arc_graph(h)
    assert t.verify_certificate(xh, cert)[0]
    assert t.construct_h(xh, cert).size == 15

    found = t.recognize(x)
    assert found is not None and found.size == 3

    print("pythreearc smoke test passed:", repr(found))


if __name__ == "__main__":
    main()
