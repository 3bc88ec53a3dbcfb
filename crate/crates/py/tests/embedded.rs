use std::ffi::CString;

use leibniz::leibniz as module;
use pyo3::prelude::*;

fn run(code: &str) {
    Python::attach(|py| {
        let code = CString::new(code).unwrap();
        py.run(&code, None, None).unwrap();
    });
}

#[test]
fn module_works_from_python() {
    pyo3::append_to_inittab!(module);
    Python::initialize();
    run(r#"
import leibniz
c3 = leibniz.Algebra.catalog("C3")
assert (c3.arity, c3.dim) == (3, 3)
assert c3.bracket(["e2", "e1", "e1"]) == "e2"
passed, cases, counterexample = c3.check()
assert passed and cases == 243 and counterexample is None
assert c3.is_cartan(["e1"]) and not c3.is_cartan(["e2"])
rank, witness = c3.regular_search(trials=100, seed=7, bound=3)
assert (rank, witness) == (1, ["e1", "e1"])
assert c3.quotient().skew() == [True] * 4
a3 = leibniz.Algebra.catalog("A3")
assert a3.series(s=1) == [4, 2, 2]
try:
    leibniz.Algebra.from_text("algebra X\narity 2\ndim 1\nfield rational\nbracket 1 1 : 1 e1\n")
except ValueError:
    pass
else:
    raise AssertionError("missing end accepted")
"#);
}
