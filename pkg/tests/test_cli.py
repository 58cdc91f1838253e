import json
from pathlib import Path

from hgaform.cli import SCHEMA, main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), (json.loads(err) if err.strip() else None)


def test_facering_square(capsys):
    code, doc, _ = run(capsys, "facering", str(DATA / "square.yaml"), "--window", "6")
    assert code == 0 and doc["schema"] == SCHEMA and doc["seed"] == 0
    assert [r["dim"] for r in doc["hilbert"]][::2] == [1, 4, 8, 12]
    assert doc["generation"] == "pass" and all(r["status"] == "pass" for r in doc["relations"])


def test_facering_simplex_binomial(capsys, tmp_path):
    p = tmp_path / "tri.yaml"
    p.write_text("vertices: [1, 2, 3]\nfacets: [[1, 2, 3]]\n")
    code, doc, _ = run(capsys, "facering", str(p), "--window", "6")
    assert code == 0 and [r["dim"] for r in doc["hilbert"]][::2] == [1, 3, 6, 10]


def test_facering_cover(capsys):
    code, doc, _ = run(capsys, "facering", str(DATA / "square.yaml"), "--window", "6",
                       "--cover", "12,23;34,1-4")
    assert code == 0 and all(r["status"] for r in doc["mayer_vietoris"])


def test_poset_input(capsys):
    code, doc, _ = run(capsys, "facering", str(DATA / "pillow.yaml"), "--window", "6")
    assert code == 0 and [r["dim"] for r in doc["hilbert"]][::2] == [1, 3, 6, 11]


def test_malformed_file(capsys, tmp_path):
    p = tmp_path / "bad.yaml"
    p.write_text("vertices: [1, 2\nfacets: [[1]]\n")
    code, _, err = run(capsys, "facering", str(p))
    assert code == 2 and err["location"]["line"] == 2


def test_missing_field(capsys, tmp_path):
    p = tmp_path / "bad.yaml"
    p.write_text("vertices: [a]\nelements:\n  - {rank: 1}\n")
    code, _, err = run(capsys, "facering", str(p))
    assert code == 2 and err["location"]["field"] == "elements[0]"


def test_invalid_poset(capsys, tmp_path):
    p = tmp_path / "bad.yaml"
    p.write_text("vertices: [a]\nelements:\n  - {id: a, rank: 1, vertices: [a]}\n"
                 "  - {id: x, rank: 2, covers: [a]}\n")
    code, doc, _ = run(capsys, "facering", str(p))
    assert code == 3 and not doc["poset"]["valid"]


def test_tor_two_points(capsys):
    code, doc, _ = run(capsys, "tor", str(DATA / "two_points.yaml"), "--window", "8")
    assert code == 0 and [t["rank"] for t in doc["totals"]][:4] == [1, 2, 2, 2]


def test_tor_one_vertex(capsys):
    code, doc, _ = run(capsys, "tor", str(DATA / "vertex.yaml"))
    assert code == 0 and doc["ranks"] == [{"k": 0, "m": 0, "rank": 1}, {"k": 1, "m": 2, "rank": 1}]


def test_hh_one_vertex(capsys):
    code, doc, _ = run(capsys, "hh", str(DATA / "vertex.yaml"), "--window", "4")
    assert code == 0 and {(r["k"], r["m"]) for r in doc["ranks"]} == {(0, 0), (0, 2), (1, 2), (0, 4), (1, 4)}


def test_integer_ring_refused(capsys):
    code, _, err = run(capsys, "tor", str(DATA / "vertex.yaml"), "--ring", "ZZ")
    assert code == 4 and err["error"] == "not a field"


def test_limits(capsys):
    code, _, err = run(capsys, "verify", "operad", "--kl", "9")
    assert code == 5
    code, _, _ = run(capsys, "tor", str(DATA / "vertex.yaml"), "--window", "99")
    assert code == 5


def test_verify_round_trip_and_determinism(capsys, tmp_path):
    out = tmp_path / "c.json"
    code = main(["verify", "aw-s", "--deg", "2", "--seed", "3", "--out", str(out)])
    first = out.read_bytes()
    main(["verify", "aw-s", "--deg", "2", "--seed", "3", "--out", str(out)])
    assert code == 0 and out.read_bytes() == first
    doc = json.loads(first)
    assert doc["seed"] == 3 and doc["failed"] == 0 and doc["checked"] == len(doc["records"])
    assert json.loads(json.dumps(doc)) == doc


def test_verify_operad_small(capsys):
    code, doc, _ = run(capsys, "verify", "operad", "--kl", "3", "--dim", "3")
    assert code == 0 and doc["status"] == "pass"


def test_unknown_suite(capsys):
    assert main(["verify", "nope"]) == 2
