import re
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from pmcut.cli import main
from pmcut.formula import ag23_formula, canonical_n3_formula, serialize_formula


@pytest.fixture()
def n3_file(tmp_path):
    p = tmp_path / "n3.nae"
    p.write_text(serialize_formula(canonical_n3_formula()))
    return p


def test_validate_formula(n3_file, capsys):
    assert main(["validate-formula", str(n3_file)]) == 0
    assert "n=3 m=4" in capsys.readouterr().out


def test_validate_formula_bad_input(tmp_path, capsys):
    p = tmp_path / "bad.nae"
    p.write_text("nae3sat-e4 3 4\n1 1 2\n1 2 3\n1 2 3\n1 2 3\n")
    with pytest.raises(SystemExit) as exc:
        main(["validate-formula", str(p)])
    assert exc.value.code == 65


def test_missing_file_is_io_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["validate-formula", "/nonexistent/x.nae"])
    assert exc.value.code == 74


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 64


def test_solve_nae(n3_file, tmp_path, capsys):
    assert main(["solve-nae", str(n3_file)]) == 0
    assert capsys.readouterr().out.startswith("SAT ")
    unsat = tmp_path / "ag.nae"
    unsat.write_text(serialize_formula(ag23_formula()))
    assert main(["solve-nae", str(unsat)]) == 1
    assert "UNSAT" in capsys.readouterr().out


def test_reduce_solve_verify_pipeline(n3_file, tmp_path, capsys):
    out = tmp_path / "out"
    assert main(["reduce", str(n3_file), "--out", str(out)]) == 0
    graph_file = out / "n3.graph"
    prov_file = out / "n3.prov"
    assert graph_file.exists() and prov_file.exists()
    capsys.readouterr()

    assert main(["verify-graph", str(graph_file)]) == 0
    assert "cubic bipartite planar 3-connected: PASS" in capsys.readouterr().out

    witness = tmp_path / "w.matching"
    cut = tmp_path / "w.cut"
    assert main(["solve-pmc", str(graph_file),
                 "--witness", str(witness), "--cut", str(cut)]) == 0
    assert witness.read_text().startswith("matching 422")
    assert cut.read_text().startswith("cut ")


def test_solve_pmc_negative_and_budget(tmp_path, capsys):
    g = tmp_path / "k4.graph"
    g.write_text("graph 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert main(["solve-pmc", str(g)]) == 1
    assert main(["solve-pmc", str(g), "--oracle"]) == 1

    n3 = tmp_path / "n3.nae"
    n3.write_text(serialize_formula(canonical_n3_formula()))
    out = tmp_path / "o"
    main(["reduce", str(n3), "--out", str(out)])
    capsys.readouterr()
    assert main(["solve-pmc", str(out / "n3.graph"), "--budget", "3"]) == 2
    assert "budget" in capsys.readouterr().out


def test_verify_gadgets(capsys):
    assert main(["verify-gadgets"]) == 0
    out = capsys.readouterr().out
    assert "gadget variable census 1 expected 1 PASS" in out
    assert "gadget clause census 3 expected 3 PASS" in out
    assert "gadget crossing census 8 expected 8 PASS" in out


def test_roundtrip_command(n3_file, tmp_path, capsys):
    assert main(["roundtrip", str(n3_file)]) == 0
    assert "SAT=yes PMC=yes assignment NAE-valid" in capsys.readouterr().out


def test_roundtrip_unsat_consistent(tmp_path, capsys):
    p = tmp_path / "ag.nae"
    p.write_text(serialize_formula(ag23_formula()))
    assert main(["roundtrip", str(p)]) == 0
    assert "SAT=no PMC=no consistent" in capsys.readouterr().out


def test_render_svg(n3_file, tmp_path, capsys):
    out = tmp_path / "r"
    assert main(["render", str(n3_file), "--format", "svg", "--out", str(out)]) == 0
    svg = (out / "n3.svg").read_text()
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    rects = root.findall(f".//{ns}rect")
    classes = [r.get("class") for r in rects]
    assert classes.count("variable") == 3
    assert classes.count("clause") == 4
    assert classes.count("crossing") == 18


def test_render_dot(n3_file, tmp_path):
    out = tmp_path / "r"
    assert main(["render", str(n3_file), "--format", "dot", "--out", str(out)]) == 0
    dot = (out / "n3.dot").read_text()
    assert dot.startswith("graph reduction {")
    assert dot.rstrip().endswith("}")
    # node and edge statements follow the plain DOT grammar
    assert re.search(r'^\s+"x1";$', dot, re.M)
    edge = re.compile(r'^\s+"[CxX]\d+" -- "[CxX]\d+" \[label="x\d+"\];$', re.M)
    assert len(edge.findall(dot)) == len(re.findall(r' -- ', dot))


def test_outputs_deterministic(n3_file, tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    main(["reduce", str(n3_file), "--out", str(out1)])
    main(["reduce", str(n3_file), "--out", str(out2)])
    assert (out1 / "n3.graph").read_text() == (out2 / "n3.graph").read_text()
    assert (out1 / "n3.prov").read_text() == (out2 / "n3.prov").read_text()
    main(["render", str(n3_file), "--format", "svg", "--out", str(out1)])
    main(["render", str(n3_file), "--format", "svg", "--out", str(out2)])
    assert (out1 / "n3.svg").read_text() == (out2 / "n3.svg").read_text()
