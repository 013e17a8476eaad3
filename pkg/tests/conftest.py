import sys
import sympy
from hypothesis import strategies as st

from qrot.laurent import LaurentPoly

q = sympy.Symbol("q")


def to_sympy(p: LaurentPoly):
    return sum((c * q**e for e, c in p.coeffs.items()), sympy.Integer(0))


def from_sympy(expr) -> LaurentPoly:
    expr = sympy.expand(expr)
    if expr == 0:
        return LaurentPoly()
    coeffs = {}
    for term in sympy.Add.make_args(expr):
        c, rest = term.as_coeff_Mul()
        e = 0 if rest == 1 else sympy.degree(rest, q) if rest.is_polynomial(q) else -sympy.degree(1 / rest, q)
        coeffs[int(e)] = coeffs.get(int(e), 0) + int(c)
    return LaurentPoly(coeffs)


laurent_polys = st.builds(
    lambda lo, cs: LaurentPoly.from_dense(lo, cs),
    st.integers(-5, 5),
    st.lists(st.integers(-6, 6), max_size=7),
)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.pytest_terminal_summary_lines():
        terminalreporter.write_line(line)
