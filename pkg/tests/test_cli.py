import io
import json

import pytest

from jacobi_ido.cli import main, to_latex


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_relations(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "relations", "--N", "1")
    assert code == 0
    assert "FE:" in out and "EF:" in out and "ALL PASS" in out


def test_characters_half(capsys):
    code, out, _ = run(capsys, "characters", "--N", "1", "--k", "1/2")
    assert code == 0
    assert out.splitlines()[0].startswith("4 characters")


def test_center_degree6(capsys):
    code, out, _ = run(capsys, "center", "--N", "1", "--degree", "6")
    assert code == 0
    assert "{1, C, C^2, C^3}" in out


def test_nf_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "nf", stdin="[tE, tF]\n", monkeypatch=monkeypatch)
    assert code == 0 and out.strip() == "tH"


def test_mul_and_comm(capsys):
    code, out, _ = run(capsys, "comm", "e1", "f1")
    assert code == 0 and out.strip() == "-2 Z11"
    code, out, _ = run(capsys, "mul", "Z11", "W")
    assert code == 0 and out.strip() == "1"


def test_reduction_into_D(capsys):
    code, out, _ = run(capsys, "nf", "te1 tf1 - tf1 te1", "--basis", "B")
    assert code == 0 and out.strip() == "1"


def test_usage_errors(capsys):
    assert run(capsys, "nf", "Z12", "--N", "1")[0] == 2
    assert run(capsys, "nf", "E +")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "center")[0] == 2
    assert run(capsys, "characters", "--k", "x")[0] == 2
    assert run(capsys, "module", "--module-kind", "Vk", "--c", "1")[0] == 2
    assert run(capsys, "nf", "tE", "--basis", "A")[0] == 2


def test_json_is_deterministic(capsys):
    args = ("characters", "--N", "1", "--k", "1/4", "--format", "json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["schema"] == "1"
    assert data["count"] == 5
    assert out1 == json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def test_verify_json_has_no_wall_time(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "isos", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert "wall_time" not in out


def test_module_json(capsys):
    code, out, _ = run(capsys, "module", "--c", "8", "--lambda", "0", "--k", "1/3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert {"c", "lambda", "k", "m_minus", "m_plus", "kind", "window"} <= set(data)
    assert [w["mu"] for w in data["window"]] == ["-2", "0", "2"]


def test_restrict(capsys):
    code, out, _ = run(capsys, "restrict", "--module-kind", "L", "--lambda", "2", "--k", "3/2")
    assert code == 0 and "split-up" in out


def test_casimir_latex(capsys):
    code, out, _ = run(capsys, "casimir", "--format", "latex")
    assert code == 0
    assert r"\tilde{F}_\nu" in out and r"\frac{5}{4}" in out


def test_latex_transform():
    assert to_latex("1/2 te1^2 Z12") == r"\frac{1}{2} \tilde{e}_{1}^{2} Z_{12}"


@pytest.mark.parametrize("kind", ["Mminus", "Mplus"])
def test_module_kinds(capsys, kind):
    code, out, _ = run(capsys, "module", "--module-kind", kind, "--lambda", "1/3", "--k", "0")
    assert code == 0 and "..." in out
