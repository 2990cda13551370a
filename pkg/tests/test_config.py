from fractions import Fraction

import pytest

from meshcat.config import (
    CatalogError,
    catalog_configuration,
    check_configuration,
    configuration_stabilizer,
    configurations_isomorphic,
    lambda_configuration,
)
from meshcat.functors import eta_automorphism
from meshcat.pathcat import mesh_category
from meshcat.tquiver import TqVertex, automorphism_group, tau_automorphism

from conftest import quotient

FAST_CATALOG = [
    ("A", 3, "2/3", 1), ("A", 3, 1, 2), ("D", 4, 1, 1), ("D", 4, 1, 3), ("D", 4, 1, 2),
    ("D", 6, "1/3", 1), ("D", 9, "1/3", 1), ("D", 6, "2/3", 1), ("A", 5, 1, 2),
    ("D", 5, 1, 1), ("D", 5, 1, 2), ("A", 2, "3/2", 1), ("A", 3, 2, 2), ("D", 4, 2, 3),
]


@pytest.mark.parametrize("args", FAST_CATALOG)
def test_catalog_entries_are_configurations(args):
    tq = quotient(*args)
    C = catalog_configuration(tq)
    rep = check_configuration(mesh_category(tq), C)
    assert rep.verdict, rep.as_dict()


@pytest.mark.parametrize("m", [2, 3])
def test_lambda_configuration(m, request):
    tq = request.getfixturevalue(f"lam{m}")
    C = lambda_configuration(m, tq)
    assert C == catalog_configuration(tq, "lambda")
    assert len(C) == m
    assert check_configuration(mesh_category(tq), C).verdict


def test_simples_preset_is_a_configuration(lam2):
    C = catalog_configuration(lam2, "simples")
    assert C == {TqVertex(0, 6), TqVertex(2, 1)}
    assert check_configuration(mesh_category(lam2), C).verdict


def test_presets_rejected_outside_nonstandard():
    tq = quotient("D", 4, 1)
    for preset in ("simples", "lambda", "nope"):
        with pytest.raises(CatalogError):
            catalog_configuration(tq, preset)


def test_axiom_violations_reported(mesh2, lam2):
    # two adjacent vertices: a nonzero Hom between members
    rep = check_configuration(mesh2, [TqVertex(0, 1), TqVertex(0, 2)])
    assert not rep.verdict
    assert ("0:1", "0:2") in {(v["source"], v["target"]) for v in rep.axiom1_violations}
    # one vertex does not dominate everything
    rep = check_configuration(mesh2, [TqVertex(0, 5)])
    assert rep.axiom2_violations
    with pytest.raises(ValueError):
        check_configuration(mesh2, [TqVertex(9, 1)])


def test_axiom2_witnesses(mesh2, lam2):
    C = lambda_configuration(2, lam2)
    rep = check_configuration(mesh2, C)
    assert set(rep.witnesses) == set(lam2.vertices)
    for e, f in rep.witnesses.items():
        assert f in C and mesh2.hom_dim(e, f)


def test_stabilizers(lam2):
    C = lambda_configuration(2, lam2)
    stab = configuration_stabilizer(lam2, C)
    assert [g.is_identity for g in stab] == [True]
    tq = quotient("A", 3, "2/3")
    stab = configuration_stabilizer(tq, catalog_configuration(tq))
    imgs = {g.images for g in stab}
    assert tau_automorphism(tq).images in imgs and len(stab) == 2


def test_isomorphic_witness_is_eta(lam2):
    C = catalog_configuration(lam2, "lambda")
    S = catalog_configuration(lam2, "simples")
    g = configurations_isomorphic(lam2, S, C)
    assert g is not None and g.images == eta_automorphism(lam2).images
    assert configurations_isomorphic(lam2, S, {TqVertex(0, 1)}) is None


@pytest.mark.parametrize("args", [("D", 4, 1, 1), ("D", 6, "1/3", 1), ("A", 3, 1, 2)])
def test_images_of_configurations_are_configurations(args):
    tq = quotient(*args)
    qc = mesh_category(tq)
    C = catalog_configuration(tq)
    for g in automorphism_group(tq):
        assert check_configuration(qc, g.image_set(C)).verdict


@pytest.mark.parametrize("kind,n,f,t", [("D", 6, Fraction(1, 3), 1), ("D", 4, 1, 1)])
def test_configuration_size_is_rank_times_frequency(kind, n, f, t):
    tq = quotient(kind, n, f, t)
    C = catalog_configuration(tq)
    if (kind, n) == ("D", 6):
        assert len(C) == 2
    else:
        assert len(C) == n


@pytest.mark.slow
@pytest.mark.parametrize("args", [("E", 6, 1, 1), ("E", 6, 1, 2), ("E", 7, 1, 1)])
def test_exceptional_catalog(args):
    tq = quotient(*args)
    assert check_configuration(mesh_category(tq), catalog_configuration(tq)).verdict
