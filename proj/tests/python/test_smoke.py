import os
import pathlib

import pytest

import sccsem

DATA = pathlib.Path(os.environ.get("SCCSEM_TEST_DATA", pathlib.Path(__file__).parent.parent / "data"))


def pentagon():
    return sccsem.parse_apx((DATA / "pt.apx").read_text())


def test_framework_basics():
    f = sccsem.Framework(["a", "b"], [("a", "b")])
    assert len(f) == 2
    assert f.labels == ["a", "b"]
    assert f.attacks == [("a", "b")]
    assert sccsem.parse_apx(f.to_apx()) == f
    assert sccsem.parse_tgf(f.to_tgf()) == f


def test_pentagon_extensions():
    pt = pentagon()
    assert sccsem.extensions(pt, "cf2") == [["a", "b1", "b3"]]
    assert sccsem.extensions(pt, "cf1.5") == [["a", "b1", "b3"], ["a", "b2"]]
    assert sccsem.is_extension(pt, "cf1.5", ["a", "b2"])
    assert not sccsem.is_extension(pt, "stg1.5", ["a", "b2"])
    assert sccsem.grounded(pt) == ["a", "b1", "b3"]
    assert sccsem.brute_force(pt, "stg2") == sccsem.extensions(pt, "stg2")


def test_criteria():
    wr = sccsem.parse_apx((DATA / "wr.apx").read_text())
    report = sccsem.check(wr, "weak-reinstatement", "cf1.5")
    assert report["holds"] is False
    assert report["witness"]["sets"]["S"] == ["a", "b2"]
    assert report["witness"]["arguments"]["a"] == "b1"

    f = sccsem.parse_apx((DATA / "sk_f.apx").read_text())
    g = sccsem.parse_apx((DATA / "sk_g.apx").read_text())
    assert sccsem.check(f, "skepticism-adequacy", "stage", other=g, relation="weak")["holds"] is False


def test_truncations():
    l4 = sccsem.truncate("bs_ladder", {}, 8)
    assert sccsem.extensions(l4, "cf2") == [["b1", "b2", "b3", "b4"]]
    study = sccsem.truncation_study("omega_chain_xy", "cf1.5", [5, 8, 12], ["x"])
    assert study["tracked"][0]["stabilized"] is True
    assert "tree_scc" in sccsem.families()


def test_construct_and_errors():
    f = sccsem.parse_apx((DATA / "sk_f.apx").read_text())
    assert sccsem.construct(f, "lex-stage") == ["b"]
    with pytest.raises(sccsem.Error):
        sccsem.parse_apx("arg(a). att(a,c).")
    with pytest.raises(sccsem.LimitExceeded):
        sccsem.extensions(pentagon(), "naive", max_args=3)
    with pytest.raises(ValueError):
        sccsem.extensions(pentagon(), "preferred")


def test_random_is_reproducible():
    a = sccsem.random_framework(9, 0.25, 0.1, 42)
    b = sccsem.random_framework(9, 0.25, 0.1, 42)
    assert a == b
    for semantics in ["naive", "stage", "cf2", "stg2", "icf2", "istg2", "cf1.5", "stg1.5"]:
        assert sccsem.extensions(a, semantics) == sccsem.brute_force(a, semantics)
