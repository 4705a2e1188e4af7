import json
from fractions import Fraction

import pytest

from nhstab import cli
from nhstab.cache import SCHEMA_VERSION, DiskCache
from nhstab.catalog import get_space
from nhstab.report import REPORT_SCHEMA_VERSION, ReportDocument, markdown
from nhstab.stability import analyze


def _doc(name, **kw):
    space = get_space(name)
    return ReportDocument.from_report(analyze(space, **kw), space, {"seconds": 0.1})


def test_json_round_trip():
    doc = _doc("sp2_su2")
    text = doc.to_json()
    back = ReportDocument.from_json(text)
    assert back == doc
    assert back.to_json() == text
    data = json.loads(text)
    assert data["schema_version"] == REPORT_SCHEMA_VERSION
    assert data["einstein"]["einstein_constant"] == "9/20"
    assert all(isinstance(m["casimir"], str) for m in data["modes"])
    assert isinstance(back.modes[0].casimir, Fraction)


def test_schema_version_is_checked():
    data = _doc("g2_su3").to_dict()
    data["schema_version"] = 999
    with pytest.raises(ValueError):
        ReportDocument.from_dict(data)


def test_json_independent_of_jobs():
    a = _doc("g2_su2", jobs=1).to_json(timing=False)
    b = _doc("g2_su2", jobs=3).to_json(timing=False)
    assert a == b


def test_markdown_row():
    md = markdown(_doc("sp2_su2"))
    assert "| sp2_su2 | 9/20 | ω2, 2ω2, 2ω1+ω2, 4ω1 |" in md
    assert "| SC |" in markdown(_doc("so7_g2"))


def test_cache_transparency(tmp_path):
    name = "family_IV_n3"
    cold_space = get_space(name)
    cold = analyze(cold_space)
    # a fresh embedding object so the in-memory branch cache is empty
    from nhstab.catalog import _get_space
    fresh = _get_space.__wrapped__(name)
    cache = DiskCache(tmp_path)
    fresh.embedding.disk_cache = cache
    first = analyze(fresh)
    assert cache.misses > 0
    files = list((tmp_path / f"v{SCHEMA_VERSION}").rglob("*.json"))
    assert files
    again = _get_space.__wrapped__(name)
    warm_cache = DiskCache(tmp_path)
    again.embedding.disk_cache = warm_cache
    warm = analyze(again)
    assert warm_cache.hits > 0 and warm_cache.misses == 0
    for r in (first, warm):
        assert r.modes == cold.modes and r.cutoff == cold.cutoff and r.summary == cold.summary
    assert not list(tmp_path.rglob(".tmp-*"))


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_analyze_md(capsys):
    code, out, _ = run(["analyze", "--space", "so7_g2", "--format", "md"], capsys)
    assert code == 0
    assert "| so7_g2 | 9/20 | - | SC |" in out


def test_cli_analyze_berger_json(capsys):
    code, out, _ = run(["analyze", "--space", "berger_sp2_su2"], capsys)
    assert code == 0
    doc = ReportDocument.from_json(out)
    assert sorted(map(tuple, doc.instabilities)) == [(0, 1), (0, 2), (2, 1), (4, 0)]


def test_cli_exit_codes(tmp_path, capsys):
    assert run(["analyze", "--space", "no_such_space"], capsys)[0] == 2
    bad = tmp_path / "bad.toml"
    bad.write_text('name = "so5_torus"\ng = { series = "B", rank = 2 }\n[h]\ntorus_rank = 2\n'
                   'restriction_matrix = [[1, 0], [0, 1]]\n')
    code, _, err = run(["analyze", "--config", str(bad)], capsys)
    assert code == 3
    assert "1/6" in err and "1/3" in err
    broken = tmp_path / "broken.toml"
    broken.write_text("name = 'x'\nflavour = 1\n")
    assert run(["analyze", "--config", str(broken)], capsys)[0] == 2
    code, out, _ = run(["analyze", "--space", "f4_so8", "--max-modes", "2"], capsys)
    assert code == 4
    assert ReportDocument.from_json(out).partial


def test_cli_einstein_and_list(capsys):
    code, out, _ = run(["einstein", "--space", "family_IX_n7"], capsys)
    assert code == 0 and "E = 23/76" in out
    code, out, _ = run(["einstein", "--space", "family_II_n3"], capsys)
    assert code == 0 and "E = 23/60" in out
    code, out, _ = run(["list", "--rank-limit", "7"], capsys)
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("e7_so8\t"))
    assert "exceptional" in line and "E = 13/36" in line


def test_cli_verify_tables(tmp_path, capsys):
    code, out, _ = run(["verify-tables", "--table", "4", "--rank-limit", "2", "--cache", str(tmp_path)], capsys)
    assert code == 0
    assert "PASS table 4 g2_su3" in out and "PASS table 4 g2_su2" in out
    assert run(["verify-tables", "--table", "42"], capsys)[0] == 2


def test_cli_uses_cache_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("NHSTAB_CACHE_DIR", str(tmp_path))
    assert run(["analyze", "--space", "g2_su2"], capsys)[0] == 0
    assert list(tmp_path.rglob("*.json"))
