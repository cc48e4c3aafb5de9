import json

from segal_abacus import pjson
from segal_abacus.cli import main
from segal_abacus.corpus import chain_poset, nerve
from segal_abacus.presheaf import validate


def run(args, tmp_path=None):
    """Invoke the CLI in-process, capturing stdout and the exit code."""
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        try:
            code = main(args)
        except SystemExit as exc:  # argparse errors
            code = exc.code
    return code, buf.getvalue()


def test_gen_and_validate(tmp_path):
    out = str(tmp_path / "n2.json")
    code, _ = run(["gen", "nerve-poset", "--size", "2", "--trunc", "4", "--out", out])
    assert code == 0
    code, text = run(["check", "validate", out])
    assert code == 0
    assert json.loads(text)["verdict"] == "pass"


def test_check_exit_codes(tmp_path):
    pm = str(tmp_path / "pm.json")
    assert run(["gen", "partial-monoid", "--trunc", "4", "--out", pm])[0] == 0
    assert run(["check", "segal", pm])[0] == 1
    assert run(["check", "2segal", pm])[0] == 0
    g = str(tmp_path / "g.json")
    assert run(["gen", "graph", "--preset", "glued", "--trunc", "4", "--out", g])[0] == 0
    assert run(["check", "segal", g])[0] == 1


def test_check_invalid_input(tmp_path):
    bad = tmp_path / "bad.json"
    X = nerve(chain_poset(1), 3)
    data = pjson.to_dict(X)
    key = sorted(data["actions"])[0]
    entry = data["actions"][key]
    k = sorted(entry)[0]
    entry[k] = "nonsense"
    bad.write_text(json.dumps(data))
    code, _ = run(["check", "segal", str(bad)])
    assert code == 2


def test_construct_pipeline(tmp_path):
    x = str(tmp_path / "x.json")
    a = str(tmp_path / "a.json")
    b = str(tmp_path / "b.json")
    assert run(["gen", "simplex", "--size", "1", "--trunc", "5", "--out", x])[0] == 0
    assert run(["construct", "boors-tot", "--in", x, "--out", a])[0] == 0
    assert run(["check", "boors", a])[0] == 0
    assert run(["construct", "extend", "--in", a, "--out", b])[0] == 0
    assert run(["check", "invertible-abacus", b])[0] == 0
    assert run(["check", "star", b])[0] == 0


def test_roundtrip_commands(tmp_path):
    x = str(tmp_path / "x.json")
    assert run(["gen", "nerve-poset", "--size", "1", "--trunc", "5", "--out", x])[0] == 0
    code, text = run(["roundtrip", "boors", x])
    assert code == 0
    payload = json.loads(text)
    assert payload["iso_with_kan"]["verdict"] == "pass"
    code, _ = run(["roundtrip", "M", x + "missing"])
    assert code == 2


def test_roundtrip_m_from_smap(tmp_path):
    from segal_abacus.presheaf import identity_smap

    f = str(tmp_path / "f.json")
    pjson.dump(identity_smap(nerve(chain_poset(1), 4)), f)
    code, text = run(["roundtrip", "M", f])
    assert code == 0
    assert json.loads(text)["extraction_identity"]["verdict"] == "pass"


def test_run_suite_presentation():
    code, text = run(["run-suite", "presentation", "--bound", "3"])
    assert code == 0
    payload = json.loads(text)
    assert payload["verdict"] == "pass"
    assert {e["id"] for e in payload["entries"]} >= {
        "presentation:relations",
        "presentation:hom-counts",
    }


def test_reports_are_deterministic(tmp_path):
    args = ["run-suite", "presentation", "--bound", "3"]
    assert run(args)[1] == run(args)[1]
    x = str(tmp_path / "x.json")
    run(["gen", "nerve-poset", "--size", "2", "--trunc", "3", "--out", x])
    first = open(x).read()
    run(["gen", "nerve-poset", "--size", "2", "--trunc", "3", "--out", x])
    assert open(x).read() == first


def test_fixture_env_dir(tmp_path, monkeypatch):
    x = tmp_path / "env.json"
    run(["gen", "constant", "--size", "2", "--trunc", "3", "--out", str(x)])
    monkeypatch.setenv("SEGAL_ABACUS_FIXTURES", str(tmp_path))
    code, _ = run(["check", "validate", "env.json"])
    assert code == 0


def test_json_roundtrip_all_shapes(tmp_path):
    from segal_abacus.configurations import p_star_tot, q_lower_star
    from segal_abacus.decalage import tot
    from segal_abacus.presheaf import identity_smap

    N = nerve(chain_poset(1), 4)
    values = [
        N,
        identity_smap(N),
        tot(N),
        q_lower_star(identity_smap(N)),
        p_star_tot(N),
    ]
    for k, val in enumerate(values):
        path = str(tmp_path / f"v{k}.json")
        pjson.dump(val, path)
        back = pjson.load(path)
        assert validate(back).passed
        path2 = str(tmp_path / f"v{k}b.json")
        pjson.dump(back, path2)
        assert open(path).read() == open(path2).read()


def test_morphism_subcommand():
    code, text = run(["morphism", "[0,0,2]:3->3"])
    assert code == 0
    assert json.loads(text)["word"] == "d1.s0@[2]"
    code, text = run(["morphism", "d1.s0@[2]"])
    assert code == 0
    assert json.loads(text)["values"] == "[0,0,2]:3->3"
    code, text = run(["morphism", "ssub@[0,1]"])
    assert code == 0
    payload = json.loads(text)
    assert payload["abacus_word"] == "f@[0,1]"
    assert payload["simplicial_word"] == "t0@[1,0]"
    assert run(["morphism", "nonsense"])[0] == 2
