import sys

import pytest

WELL_BEHAVED = """\
import sys
from hjinterval.cnf import parse_dimacs, solve_builtin

with open(sys.argv[1]) as fh:
    instance = parse_dimacs(fh.read())
outcome = solve_builtin(instance)
if outcome.status == "sat":
    print("c toy solver")
    print("s SATISFIABLE")
    print("v " + " ".join(str(lit) for lit in outcome.model) + " 0")
else:
    print("s UNSATISFIABLE")
"""


@pytest.fixture
def solver_factory(tmp_path):
    """Build throwaway solver commands from a python script body."""

    counter = [0]

    def make(body: str) -> str:
        counter[0] += 1
        script = tmp_path / f"solver{counter[0]}.py"
        script.write_text(body)
        return f"{sys.executable} {script}"

    return make


@pytest.fixture
def toy_solver(solver_factory):
    """A real external solver: parses DIMACS, answers with s/v lines."""

    return solver_factory(WELL_BEHAVED)
