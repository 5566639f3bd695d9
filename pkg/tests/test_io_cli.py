import json

import pytest

from skewcat import io
from skewcat.cli import main
from skewcat.corpus import example_workspace, heyting_chain, meet_monoidal
from skewcat.menriched import enriched_tables_equal
from skewcat.skewcore import structures_equal


@pytest.fixture
def ws_path(tmp_path):
    p = tmp_path / "ws.json"
    io.save(example_workspace(), p)
    return p


def _run(capsys, *argv):
    code = main([str(a) for a in argv] + ["--format", "structured"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["exit"] == code
    return code, doc


def test_round_trip_is_byte_identical(ws_path):
    text = ws_path.read_text()
    assert io.dumps(io.loads(text)) == text


def test_labels_are_strings(ws_path):
    doc = json.loads(ws_path.read_text())
    assert doc["schema"] == "skewcat-workspace/1"
    assert doc["structures"]["heyting3"]["unit"] == "2"


def test_loaded_structures_match_the_originals(ws_path):
    # labels come back as strings, so compare the serialized tables
    ws = io.load(ws_path)
    for name, S in (("heyting3", heyting_chain(3)), ("meet3", meet_monoidal(3))):
        assert (io.structure_to_json(ws.structures[name], "chain3")
                == io.structure_to_json(S, "chain3"))


@pytest.mark.parametrize("suite", ["skew-closed", "skew-monoidal", "comonad", "enriched",
                                   "promonoidal", "all"])
def test_check_passes(ws_path, suite):
    assert main(["check", str(ws_path), "--suite", suite, "--quiet"]) == 0


def test_corrupted_unit_map_is_blamed(ws_path, capsys):
    doc = json.loads(ws_path.read_text())
    doc["structures"]["heyting3"]["i"][0][1] = "0->1"
    ws_path.write_text(json.dumps(doc))
    code, out = _run(capsys, "check", ws_path, "--suite", "skew-closed")
    assert code == 1
    failing = {(r["axiom"], tuple(r["witness"])) for r in out["results"] if r["status"] != "pass"}
    assert ("SCC2", ("1", "0")) in failing
    assert ("typing:i", ("0",)) in failing


@pytest.mark.parametrize("argv", [
    ["check", "/nonexistent/ws.json"],
    ["check", "{ws}", "--bogus"],
    ["check", "{ws}", "--suite", "skew-closed", "--name", "nope"],
    ["derive", "{ws}", "--direction", "tensor", "--source", "nope"],
])
def test_input_errors(ws_path, argv):
    assert main([a.format(ws=ws_path) for a in argv] + ["--quiet"]) == 2


def test_bad_json_is_an_input_error(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert main(["check", str(p), "--quiet"]) == 2
    p.write_text(json.dumps({"schema": "other"}))
    assert main(["check", str(p), "--quiet"]) == 2


def test_search_bound_exit_code(ws_path):
    argv = ["yoneda", str(ws_path), "--mode", "external", "--enriched", "heyting3.self",
            "--max-search", "0", "--quiet"]
    assert main(argv) == 3


def test_derive_tensor_is_meet(ws_path):
    assert main(["derive", str(ws_path), "--direction", "tensor", "--source", "heyting3",
                 "--quiet"]) == 0
    ws = io.load(ws_path)
    M = ws.structures["heyting3.tensor"]
    objs = ("0", "1", "2")
    assert all(M.t(A, B) == min(A, B) for A in objs for B in objs)
    body = lambda S: {k: v for k, v in io.structure_to_json(S, "chain3").items() if k != "name"}
    assert body(M) == body(meet_monoidal(3))
    assert ws.provenance[("structures", "heyting3.tensor")]["derived-from"] == "heyting3"


def test_derive_closed_without_adjoints_fails(ws_path):
    assert main(["derive", str(ws_path), "--direction", "closed", "--source", "rightproj2",
                 "--quiet"]) == 1


def test_induced_comonad_identity(ws_path):
    assert main(["derive", str(ws_path), "--direction", "induced-comonad", "--source", "heyting3",
                 "--comonad", "identity", "--name", "same", "--quiet"]) == 0
    ws = io.load(ws_path)
    assert structures_equal(ws.structures["same"], ws.structures["heyting3"])
    assert main(["check", str(ws_path), "--suite", "skew-closed", "--name", "same",
                 "--quiet"]) == 0


def test_transport_there_and_back(ws_path, tmp_path):
    out = tmp_path / "out.json"
    assert main(["derive", str(ws_path), "--direction", "transport", "--source", "heyting3.self",
                 "--output", str(out), "--quiet"]) == 0
    assert main(["derive", str(out), "--direction", "transport",
                 "--source", "heyting3.self.transport", "--name", "back", "--via", "heyting3",
                 "--quiet"]) == 0
    doc = json.loads(out.read_text())
    orig, back = doc["enriched"]["heyting3.self"], doc["enriched"]["back"]
    assert back["structure"] == "heyting3"
    strip = lambda d: {k: v for k, v in d.items() if k != "provenance"}
    assert strip(back) == strip(orig)
    ws = io.load(out)
    V = ws.structures["heyting3"].base
    assert enriched_tables_equal(V, ws.enriched["back"], ws.enriched["heyting3.self"])
    assert main(["check", str(out), "--suite", "enriched", "--quiet"]) == 0


@pytest.mark.parametrize("mode", ["external", "strong", "colimit"])
def test_yoneda_modes(ws_path, mode):
    assert main(["yoneda", str(ws_path), "--mode", mode, "--enriched", "heyting3.self",
                 "--object", "1", "--at", "2", "--quiet"]) == 0


def test_yoneda_on_generated_enrichment(ws_path):
    assert main(["yoneda", str(ws_path), "--mode", "external", "--enriched", "unit:heyting3",
                 "--quiet"]) == 0


def test_convolve_product_sizes(ws_path, capsys):
    code, doc = _run(capsys, "convolve", ws_path, "--base", "rightproj2", "--op", "product",
                     "y:0", "y:1")
    assert code == 0
    # on rightproj2, y0 * y1 = y(0 (x) 1) = y1
    assert doc["notes"][0]["sizes"] == {"0": 1, "1": 1}
    code, doc = _run(capsys, "convolve", ws_path, "--base", "rightproj2", "--op", "product",
                     "0", "y:1")
    assert doc["notes"][0]["sizes"] == {"0": 0, "1": 0}


def test_convolve_checks(ws_path):
    base = ["convolve", str(ws_path), "--base", "rightproj2", "--quiet", "--op"]
    assert main(base + ["yoneda-strong-monoidal"]) == 0
    assert main(base + ["axioms", "--seed", "42"]) == 0
    assert main(base + ["adjunction", "y:0", "J", "rand:1"]) == 0
    assert main(base + ["hom", "y:0", "y:1"]) == 0
    assert main(base + ["product", "y:7", "y:1"]) == 2


def test_right_convolution_cli(ws_path):
    assert main(["convolve", str(ws_path), "--base", "heyting3", "--op", "axioms", "J", "y:1",
                 "--quiet"]) == 0
