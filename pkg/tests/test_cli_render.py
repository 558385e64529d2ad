"""Front end: file round trips, determinism, exit codes, renders."""

import json

from knotpad.cli import main
from knotpad.corpus import corpus_entries
from knotpad.pd import OrientedPDDiagram, parse_pd
from knotpad.plat import PlatDiagram, parse_plat, plat_to_pd
from knotpad.render import render_pd_svg, render_plat_ascii, render_plat_svg


def test_corpus_round_trips():
    for name, obj in corpus_entries().items():
        if isinstance(obj, PlatDiagram):
            back = parse_plat(obj.serialize())
            assert back.m == obj.m and back.rows == obj.rows, name
        else:
            back = parse_pd(obj.serialize())
            assert back.crossings == obj.crossings, name


def test_render_deterministic(corpus):
    P = PlatDiagram(3, [[5, -3], [4, 0, -4], [3, 3]])
    assert render_plat_svg(P) == render_plat_svg(P)
    assert render_plat_ascii(P).startswith("top caps:")
    for K in (corpus["trefoil"], corpus["figure-eight"], corpus["unknot"]):
        svg = render_pd_svg(K)
        assert svg == render_pd_svg(K)
        assert svg.startswith("<svg ")


def test_render_plat_grid_shape():
    P = PlatDiagram(2, [[3], [1, -2]])
    text = render_plat_ascii(P)
    assert "[+3]" in text and "[-2]" in text
    assert "row 1" in text and "row 2" in text
    # even n: shifted top matching includes the wide (1, 2m) cap
    assert "(1,4)" in text


def _write(path, obj):
    path.write_text(obj.serialize(), encoding="utf-8")
    return str(path)


def test_cli_exit_codes(tmp_path, corpus):
    tref = _write(tmp_path / "t.pd.json", corpus["trefoil"])
    # 0: ok
    assert main(["exponent", "--theory", "tl:20", "--out", str(tmp_path / "e.json")]) == 0
    assert json.loads((tmp_path / "e.json").read_text())["exponent"] == 10
    # 2: parse errors
    bad = tmp_path / "bad.json"
    bad.write_text("{oops", encoding="utf-8")
    assert main(["invariant", str(bad), "--theory", "tl:12"]) == 2
    assert main(["invariant", tref, "--theory", "xx:9"]) == 2
    # 3: not a knot
    link = tmp_path / "link.plat.json"
    link.write_text(PlatDiagram(2, [[2]]).serialize(), encoding="utf-8")
    assert main(["invariant", str(link), "--theory", "dw:a5/3cycle"]) == 3
    # 4: budget (PD bracket far above the verify cap)
    big = _write(tmp_path / "big.pd.json", plat_to_pd(PlatDiagram(2, [[61]])))
    assert main(["invariant", big, "--theory", "tl:12"]) == 4
    # 5: verification failure (certificates not satisfied)
    weak = tmp_path / "weak.plat.json"
    weak.write_text(PlatDiagram(3, [[1, 0], [3, 3, 3]]).serialize(), encoding="utf-8")
    assert main(["certify", str(weak)]) == 5


def test_cli_reduce_and_certify(tmp_path, corpus):
    tref = _write(tmp_path / "t.pd.json", corpus["trefoil"])
    out = tmp_path / "t.report.json"
    assert main(["reduce-plat", tref, "--theory", "tl:12", "--verify", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["type"] == "plat-reduction-report"
    assert all(report["certificates"].values())
    # manifest written alongside
    manifest = json.loads((tmp_path / "t.report.json.manifest.json").read_text())
    assert manifest["command"] == "reduce-plat"
    assert manifest["exit_status"] == 0
    # certify the stored plat
    plat_path = tmp_path / "t.plat.json"
    plat_path.write_text(
        json.dumps(report["output"], separators=(",", ":")) + "\n", encoding="utf-8"
    )
    cert_out = tmp_path / "cert.json"
    assert main(["certify", str(plat_path), "--out", str(cert_out)]) == 0
    cert = json.loads(cert_out.read_text())
    assert cert["m"] >= 3 and cert["distance"] > 2 * cert["m"]
    assert len(cert["volume_bounds"]) == 2


def test_cli_reduce_alt_verify(tmp_path, corpus):
    f8 = _write(tmp_path / "f8.pd.json", corpus["figure-eight"])
    out = tmp_path / "f8.alt.json"
    assert main(["reduce-alt", f8, "--theory", "tl:12", "--verify", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["case"] == "hyperbolic"
    assert report["r"] == 0


def test_cli_byte_determinism(tmp_path, corpus):
    tref = _write(tmp_path / "t.pd.json", corpus["trefoil"])
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert main(["reduce-plat", tref, "--theory", "tl:12", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()
    ra, rb = tmp_path / "a.svg", tmp_path / "b.svg"
    for out in (ra, rb):
        assert main(["render", tref, "--format", "svg", "--out", str(out)]) == 0
    assert ra.read_bytes() == rb.read_bytes()


def test_cli_corpus(tmp_path):
    outdir = tmp_path / "corp"
    assert main(["corpus", "--out", str(outdir)]) == 0
    index = json.loads((outdir / "index.json").read_text())
    assert index["type"] == "corpus-index"
    assert len(index["entries"]) == 64
    assert (outdir / "trefoil.pd.json").exists()
    assert (outdir / "rand-plat-00.plat.json").exists()
