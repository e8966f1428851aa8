"""End-to-end checks of the liekit command line: exit codes, outputs, report schema."""

import csv
import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(Path(schema_path).read_text())
failures = []


def run(*args):
    return subprocess.run([exe, *args], capture_output=True, text=True)


def expect(cond, what):
    print(("ok    " if cond else "FAIL  ") + what)
    if not cond:
        failures.append(what)


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    r = run("verify", "lie", "--json", "--no-timestamp")
    expect(r.returncode == 0, "verify lie exits 0")
    report = json.loads(r.stdout)
    jsonschema.validate(report, schema)
    expect(report["timestamp"] is None and report["passed"], "verify lie report passes with null timestamp")
    expect(any(d["id"] == "so3-structure-constants" for d in report["discrepancies"]), "SO(3) discrepancy present")
    expect(run("verify", "lie", "--json", "--no-timestamp").stdout == r.stdout, "verify output byte identical")

    out = tmp / "all.json"
    r = run("verify", "all", "--out", str(out), "--parallel", "--seed", "3")
    expect(r.returncode == 0, "verify all --parallel exits 0")
    full = json.loads(out.read_text())
    jsonschema.validate(full, schema)
    expect(isinstance(full["timestamp"], str), "timestamp set by default")
    expect(set(full["data"]) == {"finite", "lie", "so3su2", "su3", "lorentz", "poincare", "noether"},
           "all-suite data keyed by suite")

    r = run("verify", "finite", "--tol", "1e-30")
    expect(r.returncode == 1 and "first failure" in r.stderr, "impossible tolerance exits 1 with first failure")
    expect(run("verify", "bogus").returncode == 2, "unknown suite exits 2")
    expect(run("verify", "finite", "--tol", "-1").returncode == 2, "negative tolerance exits 2")
    expect(run("frobnicate").returncode == 2, "unknown subcommand exits 2")
    expect(run("--help").returncode == 0, "help exits 0")
    expect(run("verify", "lie", "--out", str(tmp / "missing" / "x.json")).returncode == 3, "unwritable --out exits 3")

    csv_path = tmp / "w.csv"
    expect(run("emit", "weights-csv", str(csv_path)).returncode == 0, "emit weights-csv")
    rows = list(csv.reader(csv_path.open()))
    expect(rows[0] == ["label", "i3", "x8"] and len(rows) == 4, "weights CSV has header and 3 rows")
    i3 = [float(x[1]) for x in rows[1:]]
    x8 = [float(x[2]) for x in rows[1:]]
    expect(abs(i3[0] - 0.5) < 1e-12 and abs(x8[2] + math.sqrt(3) / 3) < 1e-12, "weights CSV values")
    run("emit", "weights-csv", str(csv_path), "--with-y")
    rows = list(csv.reader(csv_path.open()))
    expect(rows[0] == ["label", "i3", "x8", "y"] and abs(float(rows[1][3]) - 1 / 3) < 1e-12, "weights CSV y column")

    grp = tmp / "c4.json"
    expect(run("emit", "group-json", str(grp)).returncode == 0, "emit group-json")
    g = json.loads(grp.read_text())
    expect(len(g["elements"]) == 4 and len(g["table"]) == 4 and all(len(row) == 4 for row in g["table"]),
           "C4 group file is 4 elements with a 4x4 table")
    expect(run("emit", "group-json", str(grp), "--group", "d7").returncode == 2, "unknown group exits 2")

    mat = tmp / "kx.json"
    expect(run("emit", "matrix-json", str(mat), "--matrix", "lorentz-kx").returncode == 0, "emit matrix-json")
    m = json.loads(mat.read_text())
    expect(m["dim"] == 4 and m["entries"][0][1] == [0.0, 1.0], "printed K_x has i at (0, 1)")
    expect(run("emit", "matrix-json", str(mat), "--matrix", "nope").returncode == 2, "unknown matrix exits 2")
    expect(run("emit", "pdf", str(mat)).returncode == 2, "unknown format exits 2")

    def write_matrix(path, rows):
        path.write_text(json.dumps({"dim": len(rows), "entries": [[[v, 0.0] for v in row] for row in rows]}))

    cases = {
        "identity": ([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], 1),
        "tp": ([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]], 2),
        "tptt": ([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]], 3),
        "tt": ([[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], 4),
    }
    for name, (rows, cat) in cases.items():
        p = tmp / f"{name}.json"
        write_matrix(p, rows)
        r = run("classify", str(p))
        expect(r.returncode == 0 and json.loads(r.stdout)["category"] == cat, f"classify {name} -> {cat}")
    ch, sh = math.cosh(0.7), math.sinh(0.7)
    p = tmp / "boost.json"
    write_matrix(p, [[ch, -sh, 0, 0], [-sh, ch, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    expect(json.loads(run("classify", str(p)).stdout)["category"] == 1, "classify a boost -> 1")
    write_matrix(p, [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    expect(run("classify", str(p)).returncode == 1, "non-Lorentz matrix exits 1")
    p.write_text('{"dim": 2, "entries": [[[1, 0]]]}')
    expect(run("classify", str(p)).returncode == 3, "malformed matrix file exits 3")
    p.write_text("not json")
    expect(run("classify", str(p)).returncode == 3, "unparsable file exits 3")
    expect(run("classify", str(tmp / "absent.json")).returncode == 3, "missing file exits 3")

    r = run("noether", "run", "--steps", "200", "--sample", "50")
    expect(r.returncode == 0, "noether run exits 0")
    res = json.loads(r.stdout)
    expect(res["drift"]["energy_relative"] < 1e-5 and res["drift"]["momentum_absolute"] < 1e-10, "noether run conserves charges")
    nout = tmp / "n.json"
    r = run("noether", "run", "--steps", "100", "--dt", "0.1", "--refine", "3", "--out", str(nout))
    expect(r.returncode == 0 and "energy drift" in r.stdout, "noether run --out prints a summary")
    expect(len(json.loads(nout.read_text())["convergence"]) == 3, "refinement writes three studies")
    expect(run("noether", "run", "--dt", "0.9").returncode == 2, "CFL violation exits 2")
    expect(run("noether", "run", "--ic", "sawtooth").returncode == 2, "unknown initial condition exits 2")
    expect(run("noether", "run", "--dims", "2").returncode == 2, "dims 2 exits 2")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
