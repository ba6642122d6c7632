from pathlib import Path

import pytest

import datasheet_forge as forge

CORPUS = Path(__file__).resolve().parent.parent / "corpus" / "valid"


def read(name):
    return (CORPUS / name).read_text(encoding="utf-8")


def test_version_token():
    assert forge.format_version() == "1.0"


def test_template_round_trips():
    sheet = forge.new_template()
    text = forge.serialize(sheet)
    again, diagnostics = forge.parse(text, strict=True)
    assert diagnostics == []
    assert again == sheet
    assert forge.serialize(again) == text


def test_corpus_file_parses_and_validates():
    sheet, diagnostics = forge.parse(read("v01_chest_xray.json"), strict=True)
    assert diagnostics == []
    assert sheet is not None
    report = forge.validate(sheet)
    assert report["valid"] is True
    assert report["findings"] == []
    assert report["completeness"]["total"] == 55


def test_parse_failure_yields_no_sheet():
    sheet, diagnostics = forge.parse("{not json", strict=False)
    assert sheet is None
    assert any(d["code"] == "malformed-document" for d in diagnostics)


def test_assess_wants_a_calendar_date():
    sheet, _ = forge.parse(read("v05_genomic.json"))
    with pytest.raises(ValueError):
        forge.assess(sheet, "2024-13-01")
    report = forge.assess(sheet, "2024-06-01")
    assert report["generic_level"] == "high"
    assert all({"rule", "trigger", "severity"} <= item.keys() for item in report["items"])


def test_compliance_report_shape():
    sheet, _ = forge.parse(read("v07_minimal.json"))
    report = forge.check_compliance(sheet)
    assert report["gdpr_applicable"] is True
    assert [row["id"] for row in report["obligations"]][0] == "G-ART9"


def test_coverage_grid_shape():
    grid = forge.coverage()
    assert len(grid["categories"]) == 12
    assert len(grid["profiles"]) == 4
    assert all(len(row) == 4 for row in grid["cells"])


def test_ntriples_export():
    sheet, _ = forge.parse(read("v03_derm_public.json"))
    lines = forge.export_ntriples(sheet, "https://example.org/ds").splitlines()
    assert lines == sorted(lines)
    assert all(line.endswith(" .") for line in lines)
    with pytest.raises(ValueError):
        forge.export_ntriples(sheet, "not an iri")


def test_field_paths_enumerate_the_registry():
    paths = forge.field_paths()
    assert len(paths) == 55
    assert paths[0] == "metadata.title"
    assert len(set(paths)) == 55
