import pytest

from lexigauge.corpus import (
    CorpusEntry,
    Genre,
    GroupKey,
    Language,
    Origin,
    ReferenceRow,
    load_bundled_tables,
    load_manifest,
    load_reference_table,
    load_text,
    save_manifest,
    select_group,
)

GROUP_KEYS = {
    "en-nobel": GroupKey(Language.ENGLISH, True),
    "en-non": GroupKey(Language.ENGLISH, False),
    "es-nobel": GroupKey(Language.SPANISH, True),
    "es-non": GroupKey(Language.SPANISH, False),
}


@pytest.fixture(scope="module")
def rows():
    return load_bundled_tables()


def entry(**kw):
    base = dict(
        id="X1", name="1900.Test", genre=Genre.SPEECH, language=Language.ENGLISH,
        origin=Origin.ORIGINAL, nobel=False,
    )
    base.update(kw)
    return CorpusEntry(**base)


def test_entry_year_validation():
    entry(year=1900)
    with pytest.raises(ValueError):
        entry(year=1200)
    with pytest.raises(ValueError):
        entry(year=2200)


def test_manifest_roundtrip(tmp_path):
    entries = [
        entry(id="A", name="1863.AbrahamLincoln", year=1863, source_path="/tmp/a.txt"),
        entry(id="B", name="IsaacAsimov.IRobot.Cap2", genre=Genre.NOVEL_SEGMENT,
              language=Language.SPANISH, origin=Origin.TRANSLATION, nobel=True),
    ]
    path = tmp_path / "manifest.csv"
    save_manifest(entries, path)
    assert load_manifest(path) == entries


def test_manifest_year_from_name_prefix(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text(
        "id,name,genre,origin,language,nobel,year,source_path\n"
        "E11,1863.AbrahamLincoln,S,O,EN,false,,\n"
        "E12,IsaacAsimov.IRobot.Cap2,N,T,EN,false,,\n",
        encoding="utf-8",
    )
    entries = load_manifest(path)
    assert entries[0].year == 1863
    assert entries[0].genre is Genre.SPEECH
    assert entries[1].year is None


def test_manifest_header_only(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("id,name,genre,origin,language,nobel,year,source_path\n", encoding="utf-8")
    assert load_manifest(path) == []


def test_manifest_duplicate_id(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text(
        "id,name,genre,origin,language,nobel,year,source_path\n"
        "A,x,S,O,EN,false,,\n"
        "A,y,S,O,EN,false,,\n",
        encoding="utf-8",
    )
    with pytest.raises(ValueError, match="duplicate id"):
        load_manifest(path)


def test_manifest_malformed_row_names_line(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text(
        "id,name,genre,origin,language,nobel,year,source_path\n"
        "A,x,S,O,EN,false,,\n"
        "B,y,Q,O,EN,false,,\n",
        encoding="utf-8",
    )
    with pytest.raises(ValueError, match=":3"):
        load_manifest(path)


def test_manifest_missing_columns(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("id,name\nA,x\n", encoding="utf-8")
    with pytest.raises(ValueError, match="missing columns"):
        load_manifest(path)


def test_reference_row_e1(rows):
    e1 = next(r for r in rows if r.entry.id == "E1")
    assert e1.entry.name == "1381.JohnBall"
    assert e1.entry.year == 1381
    assert (e1.d, e1.h) == (0.515, 0.914)
    assert (e1.d_rel, e1.h_rel, e1.j) == (-0.1684, 0.0049, -0.1156)
    assert e1.readability == 59.9047
    assert e1.wqs == 0.6114


def test_reference_row_sn14(rows):
    sn14 = next(r for r in rows if r.entry.id == "SN14")
    assert (sn14.d, sn14.h) == (0.315, 0.763)
    assert sn14.j == -0.3184
    assert sn14.d_rel == 0.294
    assert sn14.readability == 63.788
    # the bundled table regenerates this column from the row coordinates
    assert sn14.wqs == 2.9106


def test_select_group_sizes(rows):
    sizes = {label: len(select_group(rows, key)) for label, key in GROUP_KEYS.items()}
    assert sizes == {"en-nobel": 37, "en-non": 101, "es-nobel": 19, "es-non": 117}


def test_select_groups_disjoint(rows):
    selected = [select_group(rows, key) for key in GROUP_KEYS.values()]
    ids = [r.entry.id for group in selected for r in group]
    assert len(ids) == len(set(ids))


def test_select_group_rules(rows):
    for key in GROUP_KEYS.values():
        for r in select_group(rows, key):
            assert r.entry.genre is Genre.SPEECH
            if key.nobel:
                assert r.entry.origin is Origin.ORIGINAL


def test_select_group_empty_result(rows):
    novel_only = [r for r in rows if r.entry.genre is Genre.NOVEL_SEGMENT]
    assert novel_only  # the tables do contain segment rows
    assert select_group(novel_only, GroupKey(Language.ENGLISH, True)) == []


def test_reference_table_rejects_bad_numbers(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(
        "# language: English\n# nobel: false\n"
        "id,name,genre,origin,d,h,d_rel,h_rel,j,readability,wqs\n"
        "R1,x,S,O,0.5,0.9,0.1,0.0,0.0,50.0,oops\n",
        encoding="utf-8",
    )
    with pytest.raises(ValueError, match="R1"):
        load_reference_table(path)


def test_reference_table_rejects_out_of_range(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(
        "# language: English\n# nobel: false\n"
        "id,name,genre,origin,d,h,d_rel,h_rel,j,readability,wqs\n"
        "R1,x,S,O,1.5,0.9,0.1,0.0,0.0,50.0,0.1\n",
        encoding="utf-8",
    )
    with pytest.raises(ValueError, match="R1"):
        load_reference_table(path)


def test_reference_table_needs_group_directives(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(
        "id,name,genre,origin,d,h,d_rel,h_rel,j,readability,wqs\n",
        encoding="utf-8",
    )
    with pytest.raises(ValueError, match="directives"):
        load_reference_table(path)
    assert load_reference_table(path, language=Language.ENGLISH, nobel=False) == []


def test_load_text_errors(tmp_path):
    with pytest.raises(ValueError, match="no source text"):
        load_text(entry(source_path=None))
    with pytest.raises(FileNotFoundError):
        load_text(entry(source_path=str(tmp_path / "missing.txt")))
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"\xff\xfe\x00bad")
    with pytest.raises(UnicodeDecodeError):
        load_text(entry(source_path=str(bad)))


def test_load_text_roundtrip(tmp_path):
    p = tmp_path / "ok.txt"
    p.write_text("three little words", encoding="utf-8")
    assert load_text(entry(source_path=str(p))) == "three little words"


def test_language_parse():
    assert Language.parse("EN") is Language.ENGLISH
    assert Language.parse("spanish") is Language.SPANISH
    assert Language.ENGLISH.code == "EN"
    assert Language.SPANISH.code == "ES"
    with pytest.raises(ValueError):
        Language.parse("fr")


def test_reference_row_validation():
    e = entry()
    with pytest.raises(ValueError, match="d="):
        ReferenceRow(entry=e, d=1.2, h=0.5, d_rel=0, h_rel=0, j=0, readability=1, wqs=0)
    with pytest.raises(ValueError, match="non-finite"):
        ReferenceRow(entry=e, d=0.5, h=0.5, d_rel=float("nan"), h_rel=0, j=0, readability=1, wqs=0)
