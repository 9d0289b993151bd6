"""Tests for the command-line verifier and table generator."""

import io
import json
import shutil
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from gspin.cli import SUITES, main
from gspin.clifford import CliffordElement, even_space, odd_space, theta
from gspin.rootdata import torus_point


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = main(argv)
    return rc, buf.getvalue()


def run_json(argv):
    rc, out = run_cli(argv)
    return rc, json.loads(out)


# ---------------------------------------------------------------------------
# verify: registry and report shape


def test_registry_has_44_keys():
    assert len(SUITES) == 44
    assert all(desc for _, desc in SUITES.values())


def test_list_covers_registry():
    rc, payload = run_json(["verify", "--list"])
    assert rc == 0
    assert [row["id"] for row in payload["suites"]] == list(SUITES)
    assert all(row["description"] for row in payload["suites"])


def test_list_text_format():
    rc, out = run_cli(["verify", "--list", "--format", "text"])
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(SUITES)
    assert lines[0].startswith("eq:StdQuadSpace")


def test_report_schema():
    rc, rep = run_json(
        ["verify", "--suites", "lem:spin7,std-reg", "--n", "3..4", "--seed", "9"]
    )
    assert rc == 0
    assert rep["command"] == "verify"
    assert rep["schema"] == "gspin-verify/1"
    assert rep["seed"] == 9
    assert rep["trials"] == 12
    assert rep["n_values"] == [3, 4]
    assert rep["suites"] == ["lem:spin7", "std-reg"]
    assert rep["status"] == "pass"
    assert len(rep["results"]) == 4
    for rec in rep["results"]:
        assert rec["status"] == "pass"
        assert rec["counterexample"] is None
        assert rec["checks"] > 0
        assert rec["seed"] == f"9:{rec['suite']}:{rec['n']}"
    # records are sorted by (suite, n)
    keys = [(r["suite"], r["n"]) for r in rep["results"]]
    assert keys == sorted(keys)


def test_single_suite_over_a_range():
    rc, rep = run_json(["verify", "--suites", "lem:spin-inv-pairing", "--n", "3..6"])
    assert rc == 0
    assert [(r["suite"], r["n"]) for r in rep["results"]] == [
        ("lem:spin-inv-pairing", n) for n in (3, 4, 5, 6)
    ]
    assert all(r["status"] == "pass" for r in rep["results"])


def test_same_seed_gives_identical_bytes(tmp_path):
    argv = ["verify", "--suites", "eq:HTweights,lem:GSORoots,lem:spin7", "--n", "3..5", "--seed", "3"]
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    rc1, out1 = run_cli(argv + ["--out", str(first)])
    rc2, out2 = run_cli(argv + ["--out", str(second)])
    assert rc1 == rc2 == 0
    assert out1 == out2 == ""  # --out suppresses stdout
    assert first.read_bytes() == second.read_bytes()
    # and the same report goes to stdout without --out
    rc3, out3 = run_cli(argv)
    assert rc3 == 0
    assert out3.encode() == first.read_bytes()


def test_different_seed_changes_inputs_not_status():
    _, rep5 = run_json(["verify", "--suites", "eq:betaInvolution", "--n", "3", "--seed", "5"])
    _, rep6 = run_json(["verify", "--suites", "eq:betaInvolution", "--n", "3", "--seed", "6"])
    assert rep5["results"][0]["seed"] != rep6["results"][0]["seed"]
    assert rep5["results"][0]["status"] == rep6["results"][0]["status"] == "pass"


def test_text_format_mentions_every_suite():
    rc, out = run_cli(
        ["verify", "--suites", "lem:spin7,spin-reg", "--n", "3", "--format", "text"]
    )
    assert rc == 0
    assert "PASS lem:spin7 n=3" in out
    assert "PASS spin-reg n=3" in out
    assert out.strip().endswith("summary: 2 run, 2 passed, 0 failed")


def test_failing_suite_sets_exit_code_and_counterexample():
    def forced(n, trials, rng, chk):
        chk.ok(rng.randint(0, 10) > 99, "forced failure", n=n)

    SUITES["tmp:forced"] = (forced, "always fails (test hook)")
    try:
        rc, rep = run_json(["verify", "--suites", "tmp:forced", "--n", "3"])
    finally:
        del SUITES["tmp:forced"]
    assert rc == 1
    assert rep["status"] == "fail"
    rec = rep["results"][0]
    assert rec["status"] == "fail"
    assert rec["counterexample"]["check"] == "forced failure"
    assert rec["counterexample"]["inputs"] == {"n": 3}


def test_crashing_suite_reports_error_payload():
    def crash(n, trials, rng, chk):
        raise RuntimeError("boom")

    SUITES["tmp:crash"] = (crash, "always crashes (test hook)")
    try:
        rc, rep = run_json(["verify", "--suites", "tmp:crash", "--n", "3"])
    finally:
        del SUITES["tmp:crash"]
    assert rc == 1
    assert rep["results"][0]["counterexample"] == {"error": "RuntimeError: boom"}


# ---------------------------------------------------------------------------
# verify: usage errors


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suites", "lem:no-such-suite", "--n", "3"],
        ["verify", "--suites", "", "--n", "3"],
        ["verify", "--n", "2"],
        ["verify", "--n", "5..3"],
        ["verify", "--n", "abc"],
        ["verify", "--n", "3", "--trials", "0"],
    ],
)
def test_usage_errors_exit_2(argv):
    rc, out = run_cli(argv)
    assert rc == 2
    assert out == ""


def test_argparse_errors_exit_2():
    assert main(["verify", "--format", "yaml"]) == 2
    assert main(["table", "weights", "--n", "four", "--eps", "+"]) == 2
    assert main(["no-such-command"]) == 2


# ---------------------------------------------------------------------------
# table: weights, center, roots, h1


def test_table_weights():
    rc, t = run_json(["table", "weights", "--n", "4", "--eps", "+"])
    assert rc == 0
    assert t["kind"] == "weights"
    assert t["n"] == 4
    assert t["epsilon"] == "+"
    assert t["mu"] == [1, 1, 1, 1, 1]
    assert len(t["weights"]) == 8
    assert all(w[0] == 1 and len(w) == 5 for w in t["weights"])
    assert t["mu"] in t["weights"]
    rc, tm = run_json(["table", "weights", "--n", "4", "--eps", "-"])
    assert tm["mu"] == [1, 1, 1, 1, 0]
    assert len(tm["weights"]) == 8
    overlap = [w for w in tm["weights"] if w in t["weights"]]
    assert overlap == []


def test_table_center():
    rc, c = run_json(["table", "center", "--group", "spin", "--n", "6"])
    assert rc == 0
    assert c["kind"] == "center"
    assert c["group"] == "spin"
    assert c["structure"] == "Z/2 x Z/2"
    assert c["orders"] == [2, 2]
    assert len(c["torsion"]) == 4
    assert len(c["generators"]) == 2
    rc, c5 = run_json(["table", "center", "--group", "spin", "--n", "5"])
    assert c5["structure"] == "Z/4"
    assert c5["generators"] == [["0+1*i"] + ["-1+0*i"] * 5]
    rc, g = run_json(["table", "center", "--group", "gspin", "--n", "4"])
    assert g["structure"] == "Gm x Z/2"
    assert g["has_gm"] is True
    assert len(g["torsion"]) == 8


def test_table_roots():
    rc, r = run_json(["table", "roots", "--n", "3"])
    assert rc == 0
    assert len(r["roots"]) == 12
    assert len(r["coroots"]) == 12
    assert len(r["simple_roots"]) == 3
    assert r["cartan_matrix"] == [[2, -1, -1], [-1, 2, 0], [-1, 0, 2]]
    rc, r4 = run_json(["table", "roots", "--n", "4"])
    assert len(r4["roots"]) == 24
    assert r4["cartan_matrix"] == [
        [2, -1, 0, 0],
        [-1, 2, -1, -1],
        [0, -1, 2, 0],
        [0, -1, 0, 2],
    ]


def test_table_h1():
    rc, h = run_json(["table", "h1", "--group", "gspin", "--n", "5"])
    assert rc == 0
    assert h["kind"] == "h1"
    assert h["h1"]["structure"] == "Z/2"
    assert len(h["z1"]) == 4
    assert len(h["b1"]) == 2
    reps = h["h1"]["representatives"]
    assert reps[0] == ["1+0*i"] * 6
    assert reps[1] == ["0+1*i"] + ["-1+0*i"] * 5
    assert len(h["norm_image"]) == 2
    rc, hso = run_json(["table", "h1", "--group", "so", "--n", "3"])
    assert hso["h1"]["structure"] == "Z/2"
    assert len(hso["z1"]) == 2
    assert hso["b1"] == [["1+0*i"] * 4]
    rc, hs4 = run_json(["table", "h1", "--group", "spin", "--n", "4"])
    assert hs4["h1"]["structure"] == "1"
    assert len(hs4["h1"]["representatives"]) == 1


# ---------------------------------------------------------------------------
# table: spin-matrix and conj


def element_json(g):
    return json.dumps(g.elt.to_json())


def test_table_spin_matrix_full_and_halves():
    g = torus_point((1, 2, 3, 5))
    rc, full = run_json(["table", "spin-matrix", "--element", element_json(g)])
    assert rc == 0
    assert full["kind"] == "spin-matrix"
    assert full["space"] == {"kind": "even", "n": 3}
    assert full["epsilon"] == "full"
    assert len(full["matrix"]) == 8
    assert len(full["basis"]) == 8
    assert full["basis"][0] == []
    rc, plus = run_json(
        ["table", "spin-matrix", "--element", element_json(g), "--eps", "+"]
    )
    assert plus["epsilon"] == "+"
    assert len(plus["matrix"]) == 4
    assert all(len(u) % 2 == 0 for u in plus["basis"])
    rc, minus = run_json(
        ["table", "spin-matrix", "--element", element_json(g), "--eps", "-"]
    )
    assert minus["epsilon"] == "-"
    assert all(len(u) % 2 == 1 for u in minus["basis"])
    # the torus point is diagonal, so the full diagonal is the two half diagonals
    diag = [full["matrix"][i][i] for i in range(8)]
    assert diag == [plus["matrix"][i][i] for i in range(4)] + [
        minus["matrix"][i][i] for i in range(4)
    ]


def test_table_spin_matrix_odd_space():
    sp = odd_space(3)
    v = CliffordElement.generator(sp, 5)  # Q = 1, so an invertible vector
    g = json.dumps((v).to_json())
    rc, t = run_json(["table", "spin-matrix", "--element", g])
    assert rc == 0
    assert t["space"] == {"kind": "odd", "n": 3}
    assert len(t["matrix"]) == 4
    assert t["basis"] == [[], [1], [2], [1, 2]]


def test_table_spin_matrix_usage_errors():
    rc, out = run_cli(["table", "spin-matrix", "--element", "{not json"])
    assert rc == 2 and out == ""
    # odd-parity elements have no half-spin blocks
    sp = even_space(3)
    v = CliffordElement(sp, {(1,): 1, (4,): 1})
    rc, out = run_cli(
        ["table", "spin-matrix", "--element", json.dumps(v.to_json()), "--eps", "+"]
    )
    assert rc == 2 and out == ""
    # non-invertible element is rejected at parse time
    w = CliffordElement.generator(sp, 1)
    rc, out = run_cli(["table", "spin-matrix", "--element", json.dumps(w.to_json())])
    assert rc == 2 and out == ""


def test_table_conj_inner_outer_verdicts():
    g = torus_point((1, 2, 3, 5))
    h = theta(g)
    rc, v = run_json(["table", "conj", "--g", element_json(g), "--h", element_json(h)])
    assert rc == 0
    assert v["kind"] == "conj"
    assert v["inner"] is False
    assert v["outer"] is True
    assert v["gpin"] is True
    assert v["g"]["norm"] == v["h"]["norm"]
    assert v["g"]["cp_std"] == v["h"]["cp_std"]
    assert v["g"]["cp_spin_plus"] == v["h"]["cp_spin_minus"]
    rc, same = run_json(["table", "conj", "--g", element_json(g), "--h", element_json(g)])
    assert same["inner"] is True and same["outer"] is False


def test_table_conj_mixed_parity_gives_nulls():
    g = torus_point((1, 2, 3, 5))
    sp = even_space(3)
    x = CliffordElement(sp, {(1,): 1, (4,): 1})  # odd parity, Q = 1
    rc, v = run_json(["table", "conj", "--g", element_json(g), "--h", json.dumps(x.to_json())])
    assert rc == 0
    assert v["inner"] is None
    assert v["outer"] is None
    assert v["gpin"] is False
    assert "cp_spin_full" in v["h"]


def test_table_conj_space_mismatch_exits_2():
    g = torus_point((1, 2, 3, 5))
    h = torus_point((1, 2, 3, 5, 7))
    rc, out = run_cli(["table", "conj", "--g", element_json(g), "--h", element_json(h)])
    assert rc == 2 and out == ""


def test_table_ht_weights():
    rc, t = run_json(
        ["table", "ht-weights", "--n", "3", "--eps", "+", "--lam", "[0,0,0,0]"]
    )
    assert rc == 0
    assert t["b_shift"] == [-3, 2, 1, 0]
    assert t["std_regular"] is False
    assert t["spin_regular"] is False
    assert t["multiset"] == {"multiplicity": 1, "values": [[0, 1], [1, 1], [2, 1], [3, 1]]}
    rc, t2 = run_json(
        ["table", "ht-weights", "--n", "3", "--eps", "-", "--lam", "[0, 16, 4, 1]", "--mult", "2"]
    )
    assert t2["std_regular"] is True
    assert t2["spin_regular"] is True
    assert t2["multiset"]["multiplicity"] == 2
    assert sum(c for _, c in t2["multiset"]["values"]) == 8
    rc, out = run_cli(["table", "ht-weights", "--n", "3", "--eps", "+", "--lam", "[0,1,2,3]"])
    assert rc == 2 and out == ""  # not dominant
    rc, out = run_cli(["table", "ht-weights", "--n", "3", "--eps", "+", "--lam", "nope"])
    assert rc == 2 and out == ""


def test_table_out_flag(tmp_path):
    path = tmp_path / "weights.json"
    rc, out = run_cli(["table", "weights", "--n", "3", "--eps", "-", "--out", str(path)])
    assert rc == 0
    assert out == ""
    payload = json.loads(path.read_text())
    assert payload["kind"] == "weights"
    assert len(payload["weights"]) == 4


# ---------------------------------------------------------------------------
# installed entry points


def test_python_m_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "gspin.cli", "verify", "--suites", "lem:spin7", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["status"] == "pass"


def test_console_script():
    exe = shutil.which("gspin")
    assert exe is not None, "console script should be installed"
    proc = subprocess.run(
        [exe, "table", "roots", "--n", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kind"] == "roots"
    usage = subprocess.run(
        [exe, "verify", "--suites", "nope", "--n", "3"], capture_output=True, text=True
    )
    assert usage.returncode == 2
    assert "unknown suite key" in usage.stderr
