import pytest

from hjinterval.cnf import (
    CnfInstance,
    EncoderBugError,
    decode_model,
    encode,
    parse_dimacs,
    run_solver,
    solve_builtin,
    write_dimacs,
    write_dimacs_file,
)
from hjinterval.cube import (
    Coloring,
    enumerate_m_interval_lines,
    is_monochromatic,
    line_points,
    rank,
)
from hjinterval.search import violation_count

EXPECTED_SIZES = {1: (3, 2), 2: (9, 14), 3: (27, 68)}


def test_encode_sizes():
    for n, (nv, nc) in EXPECTED_SIZES.items():
        inst = encode(n)
        assert inst.n_vars == nv
        assert len(inst.clauses) == nc


def test_encode_n1_clauses():
    inst = encode(1)
    assert inst.clauses == ((1, 2, 3), (-1, -2, -3))


def test_encode_clause_pairs_per_line():
    # each line contributes a not-all-zero and a not-all-one clause
    inst = encode(2)
    pos = [c for c in inst.clauses if all(l > 0 for l in c)]
    neg = [c for c in inst.clauses if all(l < 0 for l in c)]
    assert len(pos) == len(neg) == 7
    for p, q in zip(pos, neg):
        assert q == tuple(-l for l in p)


def test_sym_break_adds_unit_clause():
    plain = encode(2)
    broken = encode(2, sym_break=True)
    assert len(broken.clauses) == len(plain.clauses) + 1
    assert (-1,) in broken.clauses


def test_encode_m2_counts():
    inst = encode(3, m=2)
    assert inst.n_vars == 27
    assert len(inst.clauses) == 74


def test_encode_rejects_bad_args():
    with pytest.raises(ValueError):
        encode(0)
    with pytest.raises(ValueError):
        encode(2, m=0)


def test_provenance_aligned_with_clauses():
    inst = encode(2)
    assert len(inst.provenance) == len(inst.clauses)
    assert inst.provenance[0].startswith("line ")


def test_dimacs_output_is_stable():
    inst = encode(3, sym_break=True)
    a = write_dimacs(inst)
    assert a == write_dimacs(encode(3, sym_break=True))
    header = a.splitlines()[0]
    assert header == "p cnf 27 69"


def test_dimacs_roundtrip():
    inst = encode(2)
    back = parse_dimacs(write_dimacs(inst))
    assert back.n_vars == inst.n_vars
    assert back.clauses == inst.clauses


def test_dimacs_comments_carry_line_provenance():
    text = write_dimacs(encode(2))
    assert "c line 1..1 fixed=2:1" in text
    assert "c line 1..2 fixed=-" in text


def test_parse_dimacs_rejects_malformed():
    for bad in (
        "",
        "p cnf 3\n1 2 3 0\n",
        "p cnf 3 2\n1 2 3 0\n",  # clause count mismatch
        "p cnf 2 1\n1 3 0\n",  # variable out of range
        "p cnf 3 1\n1 2 3\n",  # missing terminator
    ):
        with pytest.raises(ValueError):
            parse_dimacs(bad)


def test_write_dimacs_file_roundtrip(tmp_path):
    inst = encode(2, sym_break=True)
    path = tmp_path / "n2.cnf"
    write_dimacs_file(inst, str(path))
    assert parse_dimacs(path.read_text()).clauses == inst.clauses


def test_solve_builtin_sat_small():
    for n in (1, 2, 3):
        inst = encode(n)
        out = solve_builtin(inst)
        assert out.status == "sat"
        coloring = decode_model(out.model, n)
        assert violation_count(coloring) == 0


def test_solve_builtin_unsat():
    inst = CnfInstance(n_vars=1, clauses=((1,), (-1,)), provenance=("a", "b"))
    assert solve_builtin(inst).status == "unsat"


def test_instance_rejects_empty_clause():
    with pytest.raises(ValueError):
        CnfInstance(n_vars=2, clauses=((),), provenance=("empty",))


def test_solve_builtin_respects_sym_break():
    out = solve_builtin(encode(3, sym_break=True))
    assert out.status == "sat"
    coloring = decode_model(out.model, 3)
    assert coloring.color_of_rank(0) == 0


def test_m2_instance_decodes_to_two_interval_avoider():
    out = solve_builtin(encode(3, m=2))
    assert out.status == "sat"
    coloring = decode_model(out.model, 3, m=2)
    for line in enumerate_m_interval_lines(3, 2):
        assert not is_monochromatic(coloring, line)


def test_decode_model_mapping_input():
    out = solve_builtin(encode(2))
    mapping = {abs(l): l > 0 for l in out.model}
    assert decode_model(mapping, 2) == decode_model(out.model, 2)


def test_decode_model_rejects_contradiction():
    with pytest.raises(ValueError):
        decode_model([1, -1, 2, 3], 1)


def test_decode_model_rejects_incomplete():
    with pytest.raises(ValueError):
        decode_model([1, 2], 1)


def test_decode_model_catches_bogus_model():
    # a constant colouring satisfies nothing: decoding must not trust it
    with pytest.raises(EncoderBugError):
        decode_model([-1, -2, -3], 1)


def test_decode_model_names_the_offending_line():
    try:
        decode_model([1, 2, 3], 1)
    except EncoderBugError as exc:
        assert "1..1" in str(exc)
    else:
        pytest.fail("expected EncoderBugError")


def test_var_numbering_follows_rank():
    # variable r+1 speaks for the cell of rank r
    inst = encode(2)
    first_line = next(iter(enumerate_m_interval_lines(2, 1)))
    expected = tuple(rank(p) + 1 for p in line_points(first_line))
    assert inst.clauses[0] == expected


def test_run_solver_happy_path(tmp_path, toy_solver):
    path = tmp_path / "n2.cnf"
    write_dimacs_file(encode(2), str(path))
    out = run_solver(str(path), toy_solver)
    assert out.status == "sat"
    coloring = decode_model(out.model, 2)
    assert violation_count(coloring) == 0


def test_run_solver_reports_unsat(tmp_path, toy_solver):
    path = tmp_path / "bad.cnf"
    write_dimacs_file(
        CnfInstance(n_vars=1, clauses=((1,), (-1,)), provenance=("a", "b")),
        str(path),
    )
    assert run_solver(str(path), toy_solver).status == "unsat"


def test_run_solver_missing_binary(tmp_path):
    path = tmp_path / "n1.cnf"
    write_dimacs_file(encode(1), str(path))
    out = run_solver(str(path), "no-such-solver-binary")
    assert out.status == "unknown"
    assert "failed to start" in out.diagnostics


def test_run_solver_garbage_output(tmp_path, solver_factory):
    path = tmp_path / "n1.cnf"
    write_dimacs_file(encode(1), str(path))
    cmd = solver_factory("print('hello, is this sat?')")
    out = run_solver(str(path), cmd)
    assert out.status == "unknown"
    assert out.model is None


def test_run_solver_sat_without_model(tmp_path, solver_factory):
    path = tmp_path / "n1.cnf"
    write_dimacs_file(encode(1), str(path))
    cmd = solver_factory("print('s SATISFIABLE')")
    out = run_solver(str(path), cmd)
    assert out.status == "unknown"
    assert "model" in out.diagnostics


def test_run_solver_crash(tmp_path, solver_factory):
    path = tmp_path / "n1.cnf"
    write_dimacs_file(encode(1), str(path))
    cmd = solver_factory("import sys; sys.exit(3)")
    out = run_solver(str(path), cmd)
    assert out.status == "unknown"


def test_run_solver_timeout(tmp_path, solver_factory):
    path = tmp_path / "n1.cnf"
    write_dimacs_file(encode(1), str(path))
    cmd = solver_factory("import time; time.sleep(30)")
    out = run_solver(str(path), cmd, timeout=0.5)
    assert out.status == "unknown"
    assert "time" in out.diagnostics.lower()


def test_run_solver_multiline_v_section(tmp_path, solver_factory):
    path = tmp_path / "n1.cnf"
    write_dimacs_file(encode(1), str(path))
    cmd = solver_factory(
        "print('s SATISFIABLE')\nprint('v 1 -2')\nprint('v 3 0')"
    )
    out = run_solver(str(path), cmd)
    assert out.status == "sat"
    assert out.model == (1, -2, 3)
