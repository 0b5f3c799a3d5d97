import re
import subprocess
import sys

import pytest

from weightgraph.cli import main
from weightgraph.corpus import abelian, filiform
from weightgraph.formats import format_edge_list, format_structure_constants, format_weight_system
from weightgraph.graph import SimpleGraph
from weightgraph.weights import WeightSystem


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return {
        "k6": write("k6.txt", format_edge_list(SimpleGraph.complete(6))),
        "p4": write("p4.txt", format_edge_list(SimpleGraph.path(4))),
        "short": write("short.txt", "6 9\n" + "".join(f"1 {v}\n" for v in range(2, 7)) + "2 3\n2 4\n2 5\n"),
        "l4": write("l4.txt", format_structure_constants(filiform(4))),
        "a5": write("a5.txt", format_structure_constants(abelian(5))),
        "solv": write("solv.txt", "dim 2\n1 2 2 1\n"),
        "jacobi": write("jacobi.txt", "dim 3\n1 2 3 1\n2 3 2 1\n"),
        "repeat": write("repeat.txt", "dim 4\n1 2 3 1\n1 2 4 1\n"),
        "bad_alg": write("bad_alg.txt", "dim 3\n2 1 3 1\n"),
        "heis_w": write("heis_w.txt", format_weight_system(WeightSystem([(1, 0), (0, 1), (1, 1)]))),
        "dir": str(tmp_path),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_exit_codes(files, capsys):
    code, out, _ = run(capsys, "check", files["k6"])
    assert code == 0 and "overall           pass" in out
    code, out, _ = run(capsys, "check", files["p4"])
    assert code == 1 and "d(1,4)=3" in out
    code, _, err = run(capsys, "check", files["short"])
    assert code == 2 and "line" in err and "declares 9 edges" in err
    code, _, err = run(capsys, "check", files["dir"] + "/missing.txt")
    assert code == 2


def test_check_dot(files, capsys, tmp_path):
    dot = tmp_path / "g.dot"
    run(capsys, "check", files["k6"], "--dot", str(dot))
    assert dot.read_text().count("--") == 15


def test_algebra_l4(files, capsys, tmp_path):
    dot = tmp_path / "l4.dot"
    code, out, _ = run(capsys, "algebra", files["l4"], "--format", "keyvalue", "--dot", str(dot))
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.splitlines())
    assert kv["torus_rank"] == "2"
    assert kv["center_dim"] == "1"
    assert kv["raw_graph.isolated"] == "4"
    assert kv["criteria.overall"] == "pass"
    assert kv["sum_triples"] == "(1,2,3);(1,3,4)"
    assert 'label="p4\\n(2,1)", style=filled' in dot.read_text()


def test_algebra_abelian(files, capsys):
    code, out, _ = run(capsys, "algebra", files["a5"], "--format", "keyvalue")
    kv = dict(line.split("=", 1) for line in out.splitlines())
    assert code == 0
    assert kv["weight_graph.edges"].count("-") == 10
    assert kv["criteria.overall"] == "pass"


@pytest.mark.parametrize("key, code, fragment", [
    ("solv", 1, "not nilpotent"),
    ("jacobi", 1, "Jacobi identity fails"),
    ("repeat", 1, "repeated weights"),
    ("bad_alg", 2, "line 2"),
])
def test_algebra_failures(files, capsys, key, code, fragment):
    got, out, err = run(capsys, "algebra", files[key])
    assert got == code
    assert fragment in out + err


def test_weights_subcommand(files, capsys):
    code, out, _ = run(capsys, "weights", files["heis_w"], "--format", "keyvalue")
    assert code == 0
    assert "sum_triples=(1,2,3)" in out


def test_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "-p", "6")
    assert code == 0
    assert "q >= 9" in out and "published elimination count 66" in out
    code, out, _ = run(capsys, "enumerate", "-p", "3", "--format", "keyvalue")
    assert "eliminated_by_bound=0" in out.splitlines()
    code, _, err = run(capsys, "enumerate", "-p", "9")
    assert code == 2 and "capacity" in err
    code, _, _ = run(capsys, "enumerate", "-p", "2")
    assert code == 2


def test_enumerate_dump_and_plot(capsys, tmp_path):
    png = tmp_path / "e.png"
    code, out, err = run(capsys, "enumerate", "-p", "5", "--dump", str(tmp_path / "d"), "--plot", str(png),
                         "--format", "keyvalue")
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.splitlines())
    dumped = sorted((tmp_path / "d").iterdir())
    assert len(dumped) == int(kv["stage.edge_lower_bound"])
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_enumerate_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "enumerate", "-p", "5")
    _, b, _ = run(capsys, "enumerate", "-p", "5")
    assert a == b


def test_bounds(capsys, tmp_path):
    png = tmp_path / "b.png"
    code, out, _ = run(capsys, "bounds", "--max", "10", "--plot", str(png))
    assert code == 0
    rows = {int(line.split()[0]): line.split() for line in out.splitlines()[1:]}
    assert rows[6][1:5] == ["5", "6", "9", "4"]
    assert rows[3][4] == "0"
    assert rows[8][4:] == ["9", "0", "equality"]
    assert png.exists()
    code, _, _ = run(capsys, "bounds", "--max", "65")
    assert code == 2
    code, _, _ = run(capsys, "bounds", "--max", "2")
    assert code == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check"])
    assert exc.value.code == 2


# --- keyvalue mode carries every datum of text mode ---------------------------

def _check_text_table(text):
    out = {}
    for line in text.splitlines()[2:]:
        parts = line.split(None, 2)
        if parts[0] == "overall":
            out["overall"] = parts[1].lower()
        else:
            out[parts[0]] = (parts[1].lower(), parts[2] if len(parts) > 2 else "")
    return out


def test_check_keyvalue_covers_text(files, capsys):
    for key in ("k6", "p4"):
        _, text, _ = run(capsys, "check", files[key])
        _, kvtext, _ = run(capsys, "check", files[key], "--format", "keyvalue")
        kv = dict(line.split("=", 1) for line in kvtext.splitlines())
        head = re.match(r"graph: p=(\d+) q=(\d+)", text)
        assert (kv["p"], kv["q"]) == head.groups()
        table = _check_text_table(text)
        assert kv["overall"] == table.pop("overall")
        for name, (result, witness) in table.items():
            assert kv[f"check.{name}"] == result
            assert kv.get(f"witness.{name}", "") == witness


def test_algebra_keyvalue_covers_text(files, capsys):
    _, text, _ = run(capsys, "algebra", files["l4"])
    _, kvtext, _ = run(capsys, "algebra", files["l4"], "--format", "keyvalue")
    kv = dict(line.split("=", 1) for line in kvtext.splitlines())
    lines = text.splitlines()

    def field(label):
        line = next(line for line in lines if line.strip().startswith(label))
        return line.strip()[len(label):].strip()

    assert field("lower central series").replace(" > ", ",") == kv["series"]
    assert field("nilpotent") == kv["nilpotent"]
    assert field("center dimension") == kv["center_dim"]
    assert field("diagonal torus rank") == kv["torus_rank"]
    for i in range(1, 5):
        assert field(f"X{i}") == kv[f"weight.{i}"]
    sums = re.findall(r"a(\d+)\+a(\d+)=a(\d+)", field("weight sums"))
    assert ";".join(f"({i},{j},{k})" for i, j, k in sums) == kv["sum_triples"]
    assert field("raw graph edges") == kv["raw_graph.edges"]
    assert field("raw graph isolated") == kv["raw_graph.isolated"]
    assert field("weight graph edges") == kv["weight_graph.edges"]
    assert field("sum/bracket condition") == "holds" and kv["sum_bracket_condition"] == "pass"
    start = lines.index("weight graph checks") + 1
    block = "\n".join(line[2:] for line in lines[start:] if line.startswith("  "))
    table = _check_text_table(block)
    assert kv["criteria.overall"] == table.pop("overall")
    for name, (result, _) in table.items():
        assert kv[f"criteria.check.{name}"] == result
    assert field("status:") == kv["status"]


def test_enumerate_keyvalue_covers_text(capsys):
    _, text, _ = run(capsys, "enumerate", "-p", "6")
    _, kvtext, _ = run(capsys, "enumerate", "-p", "6", "--format", "keyvalue")
    kv = dict(line.split("=", 1) for line in kvtext.splitlines())
    assert re.search(r"total classes\s+(\d+)", text).group(1) == kv["total_graphs"]
    assert re.search(r"connected classes\s+(\d+)", text).group(1) == kv["connected_graphs"]
    m = re.search(r"naive edge bound\s+q >= (\d+)\s+(\d+)", text)
    assert m.groups() == (kv["naive_min_edges"], kv["candidates_naive"])
    m = re.search(r"sharp edge bound\s+q >= (\d+)\s+eliminates (\d+)", text)
    assert m.groups() == (kv["min_edges"], kv["eliminated_by_bound"])
    m = re.search(r"published elimination count (\d+): (\w+)", text)
    assert m.groups() == (kv["eliminated_by_bound.published"], kv["eliminated_by_bound.agreement"])
    assert re.search(r"pass every necessary check\s+(\d+)", text).group(1) == kv["candidates_strict"]
    for q, a, c in re.findall(r"^  (\d+)\s+(\d+)\s+(\d+)$", text, re.M):
        assert kv[f"histogram.q{q}"] == a
        assert kv.get(f"connected_histogram.q{q}", "0") == c
    for name, count in re.findall(r"^  ([a-z_0-9]+)\s+(\d+)$", text, re.M):
        assert kv[f"stage.{name}"] == count


def test_bounds_keyvalue_covers_text(capsys):
    _, text, _ = run(capsys, "bounds", "--max", "12")
    _, kvtext, _ = run(capsys, "bounds", "--max", "12", "--format", "keyvalue")
    kv = dict(line.split("=", 1) for line in kvtext.splitlines())
    for line in text.splitlines()[1:]:
        cols = line.split()
        p = cols[0]
        assert [kv[f"p{p}.{k}"] for k in ("naive", "sums", "min", "f")] == cols[1:5]
        if len(cols) > 5:
            assert kv[f"p{p}.f_minus_p_plus_1"] == cols[5]
            assert kv[f"p{p}.f_ge_p_plus_1"] == cols[6]


def test_module_entry_point(files):
    res = subprocess.run([sys.executable, "-m", "weightgraph", "check", files["p4"]],
                         capture_output=True, text=True)
    assert res.returncode == 1
    assert "d(1,4)=3" in res.stdout
