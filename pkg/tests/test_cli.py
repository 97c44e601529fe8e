import json

import pytest

from oddcycles import render
from oddcycles.cli import main
from oddcycles.cycles.arithmetic import closed_form_scan
from oddcycles.field import CycInt, make_context
from oddcycles.group import is_odd_vanishing_cycle


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_minpoly(capsys):
    code, out, _ = run(capsys, "minpoly", "4")
    assert code == 0 and "t^4+1" in out and "t^2-2" in out
    code, out, _ = run(capsys, "minpoly", "3")
    assert "t^2-t+1" in out and "pmin: t-1" in out
    code, out, _ = run(capsys, "minpoly", "5")
    assert "t^4-t^3+t^2-t+1" in out and "t^2-t-1" in out
    assert run(capsys, "minpoly", "2")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "enumerate", "5", "--age", "1", "--radius2", "3")[0] == 2
    assert run(capsys, "member", "3", "x", "1")[0] == 2
    assert run(capsys, "enumerate", "5", "--radius2", "-1")[0] == 2
    assert run(capsys, "enumerate", "5", "--precision", "8")[0] == 2


def test_member(capsys):
    assert run(capsys, "member", "3", "1", "0")[0] == 0
    code, out, _ = run(capsys, "member", "3", "2", "4")
    assert code == 1 and out.startswith("false")
    code, out, _ = run(capsys, "member", "5", "0;2", "1;0")
    assert code == 0 and out.startswith("true")


def test_cf(capsys):
    code, out, _ = run(capsys, "cf", "5", "0;1", "1")
    assert code == 0 and out.splitlines()[0] == "[1]"
    code, out, _ = run(capsys, "cf", "3", "1", "2")
    assert out.splitlines() == ["[0; -2]", "terminated"]
    code, out, _ = run(capsys, "cf", "7", "0;0;1", "3", "--max-steps", "1")
    assert code in (0, 1)
    if code == 1:
        assert out.splitlines()[-1] == "undecided(max-steps)"


def test_reduce5(capsys):
    code, out, _ = run(capsys, "reduce5", "2", "0")
    data = json.loads(out)
    assert code == 0 and data["u"]["coeffs"] == [2, 0] and data["delta"]["a"] == [1, 0]
    # 1 + ζ⁴ = 1 + (λ − 1)·... written in the (1, η) basis: a = 1 − λ... use the identity
    ctx = make_context(5)
    g = 1 + CycInt.zeta(ctx) ** 4
    code, out, _ = run(capsys, "reduce5", ";".join(map(str, g.a.c)), ";".join(map(str, g.c.c)))
    data = json.loads(out)
    assert data["u"]["coeffs"] == [-1, 1]
    z2 = CycInt.zeta(ctx) ** 2
    assert (data["delta"]["a"], data["delta"]["c"]) == (list(z2.a.c), list(z2.c.c))
    code, out, _ = run(capsys, "reduce5", "0;1", "1")
    data = json.loads(out)
    assert data["u"]["coeffs"] == [1, 0] and data["delta"]["a"] == [0, 1]
    assert run(capsys, "reduce5", "0", "0")[0] == 1


def test_holes(capsys):
    code, out, _ = run(capsys, "holes", "3", "2", "--primes", "2,3,5,7")
    data = json.loads(out)
    assert code == 0 and data["base"] == [173, 19] and data["verified"]
    code, out, _ = run(capsys, "holes", "3", "1", "--primes", "2")
    assert json.loads(out)["verified"]
    code, out, _ = run(capsys, "holes", "4", "2")
    assert json.loads(out)["verified"]
    assert run(capsys, "holes", "5", "1")[0] == 2
    assert run(capsys, "holes", "3", "2", "--primes", "2,3,5,5")[0] == 2


def test_enumerate_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "5", "--radius2", "1")
    rows = render.read_csv(out)
    assert code == 0 and len(rows) == 10
    assert list(rows[0]) == list(render.CSV_COLUMNS)
    out_file = tmp_path / "q3.csv"
    run(capsys, "enumerate", "3", "--radius2", "25", "--out", str(out_file))
    rows = render.read_csv(out_file.read_text())
    ctx = make_context(3)
    got = {CycInt.from_coeffs(ctx, [int(r["a_coeffs"])], [int(r["c_coeffs"])]) for r in rows}
    assert got == set(closed_form_scan(ctx, 25))


def test_enumerate_q7_shell_one(capsys):
    ctx = make_context(7)
    bound = float(ctx.lam * ctx.lam * 2 + 1)
    code, out, _ = run(capsys, "enumerate", "7", "--radius2", f"{bound + 0.001:.6f}")
    rows = render.read_csv(out)
    assert len(rows) == 2 * 7 + 4 * 7


def test_csv_round_trip_membership(capsys):
    code, out, _ = run(capsys, "enumerate", "7", "--age", "2")
    ctx = make_context(7)
    for r in render.read_csv(out):
        a = [int(v) for v in r["a_coeffs"].split(";")]
        c = [int(v) for v in r["c_coeffs"].split(";")]
        assert is_odd_vanishing_cycle(CycInt.from_coeffs(ctx, a, c))


@pytest.mark.parametrize("q", [5, 8])
def test_svg_and_csv_agree_and_are_deterministic(capsys, tmp_path, q):
    svg1, svg2, csv1 = tmp_path / "a.svg", tmp_path / "b.svg", tmp_path / "a.csv"
    run(capsys, "enumerate", str(q), "--format", "svg", "--out", str(svg1))
    run(capsys, "enumerate", str(q), "--format", "svg", "--out", str(svg2), "--workers", "2")
    run(capsys, "enumerate", str(q), "--out", str(csv1))
    text = svg1.read_bytes()
    assert text == svg2.read_bytes()
    assert render.svg_point_count(text.decode()) == len(render.read_csv(csv1.read_text()))


def test_json_stable(capsys):
    _, a, _ = run(capsys, "enumerate", "6", "--radius2", "6.99", "--format", "json")
    _, b, _ = run(capsys, "enumerate", "6", "--radius2", "6.99", "--format", "json")
    data = json.loads(a)
    assert a == b and data["count"] == 12 and list(data) == sorted(data)


def test_precision_changes_decimals(capsys):
    _, out, _ = run(capsys, "enumerate", "5", "--radius2", "1", "--precision", "100")
    row = render.read_csv(out)[1]
    assert len(row["re"].split(".")[1]) == render.decimal_places(100)


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--q-list", "3,5", "--seed", "7", "--suites", "relations,ring,q5")
    assert code == 0 and out.strip().endswith("all suites passed")
    _, again, _ = run(capsys, "verify", "--q-list", "3,5", "--seed", "7", "--suites", "relations,ring,q5")
    assert out == again
    code, out, _ = run(capsys, "verify", "--q-list", "12", "--suites", "relations")
    assert code == 0 and "relations    q=12" in out
    assert run(capsys, "verify", "--suites", "nope")[0] == 2


def test_fixed_formatting():
    from fractions import Fraction

    assert render.fixed(Fraction(1, 3), 4) == "0.3333"
    assert render.fixed(Fraction(-2, 3), 3) == "-0.667"
    assert render.fixed(Fraction(5, 2), 0) == "3"
