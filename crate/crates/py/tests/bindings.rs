use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyDict;

/// Runs `code` with the module bound to the name `t`.
fn run(code: &str) {
    Python::attach(|py| {
        let m = PyModule::new(py, "pythreearc").unwrap();
        pythreearc::register(&m).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("t", m).unwrap();
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn graphs_and_three_arc_graphs() {
    run(r#"
g = t.cycle(3)
assert (g.order, g.size) == (3, 3)
x, labels = t.three_arc_graph(g)
assert (x.order, x.size) == (6, 3)
assert labels[0] == (0, 1)
assert t.Graph.from_graph6(g.to_graph6()) == g
assert t.Graph.parse("0 1\n1 2\n").size == 2
try:
    t.Graph(2, [(0, 0)])
    raise AssertionError("loop accepted")
except ValueError:
    pass
"#);
}

#[test]
fn domination_and_bounds() {
    run(r#"
import json
size, verts = t.gamma_exact(t.petersen())
assert size == 3 and len(verts) == 3
assert t.gamma_exact(t.star(3), min_degree=2)[0] == 1
assert t.theorem3_bound(t.friendship(3)) == "5"
b = json.loads(t.theorem4_bounds(t.complete(5)))
assert b["delta4"] == "17/4"
plan = json.loads(t.dominate_x(t.two_cliques(3, 3), "clawfree"))
assert plan["size"] == 4 and plan["verified"]
try:
    t.dominate_x(t.complete(4), "clawfree")
except ValueError:
    raise AssertionError("K4 is claw-free")
try:
    t.dominate_x(t.star(3), "thm3")
    raise AssertionError("degree-1 vertex accepted")
except ValueError as e:
    assert "minimum degree" in str(e)
"#);
}

#[test]
fn recognition() {
    run(r#"
import json
h = t.complete(4)
x, _ = t.three_arc_graph(h)
cert = t.derive_certificate(h)
assert t.verify_certificate(x, cert) == (True, None, None)
back = t.construct_h(x, cert)
assert back.size == 6
ok, cond, _ = t.verify_certificate(t.cycle(4), json.dumps({"v1": [[0], [1], [2], [3]], "v2": [], "e": []}))
assert not ok and cond == "e"
found = t.recognize(t.Graph(6, [(0, 1), (2, 3), (4, 5)]))
assert found is not None and found.size == 3
assert t.recognize(t.Graph(4, [(0, 1), (1, 2), (2, 3)])) is None
assert t.embed_in_cone_check(t.petersen())
assert t.cone(t.cycle(4)).degree(4) == 4
"#);
}
