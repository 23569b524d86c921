import pytest

from nichols_rank2.instantiate import ROOT_CLASSES, instantiate
from nichols_rank2.weylgroupoid import (CartanScheme2, ObjectCapExceeded, generate, is_standard,
                                        positive_roots, root_module_assignment)

B2 = [[2, -2], [-1, 2]]
B2_ROOTS = {(1, 0), (0, 1), (1, 1), (2, 1)}


@pytest.mark.parametrize("ex,p", [("z32-p1", 0), ("z32-p2", 0)])
def test_b2_groupoids_are_standard(ex, p):
    C = generate(instantiate(ex, p).pair())
    assert len(C.objects) == 2
    assert all(C.matrices[x] == B2 for x in C.objects)
    assert is_standard(C) and C.is_cartan_scheme()
    assert all(set(positive_roots(C, x)) == B2_ROOTS for x in C.objects)


def test_fifth_pair_groupoid():
    C = generate(instantiate("z31a-p5", 2).pair())
    mats = {C.labels[x]: C.matrices[x] for x in C.objects}
    assert mats == {"P5'": [[2, -2], [-2, 2]], "P5": B2, "P5''": [[2, -4], [-1, 2]]}
    assert not is_standard(C) and C.is_cartan_scheme()
    obj = {C.labels[x]: x for x in C.objects}
    assert set(positive_roots(C, obj["P5''"])) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1),
                                                   (4, 1)}
    assert (2, 3) in positive_roots(C, obj["P5'"])


def test_single_object_scheme():
    C = CartanScheme2(objects=[0], r={1: {0: 0}, 2: {0: 0}}, matrices={0: [[2, 0], [0, 2]]})
    assert C.is_cartan_scheme() and is_standard(C)
    assert set(positive_roots(C, 0)) == {(1, 0), (0, 1)}


def test_broken_scheme_detected():
    C = CartanScheme2(objects=[0, 1], r={1: {0: 1, 1: 0}, 2: {0: 0, 1: 1}},
                      matrices={0: B2, 1: [[2, -1], [-1, 2]]})
    assert not C.is_cartan_scheme()


def test_object_cap():
    with pytest.raises(ObjectCapExceeded):
        generate(instantiate("t", 0).pair(), object_cap=3)


def test_pair_mode_groupoids():
    C = generate(instantiate("g2a", 0).pair())
    assert C.identify == "pair" and len(C.objects) == 6
    assert all(C.matrices[x] == [[2, -1], [-1, 2]] for x in C.objects)
    assert len(positive_roots(C, C.objects[0])) == 3
    C = generate(instantiate("t", 0).pair())
    assert len(C.objects) == 12 and C.is_cartan_scheme()
    assert len(positive_roots(C, C.objects[0])) == 6


@pytest.mark.parametrize("ex,p,cls", [("z32-p1", 0, "P1"), ("z32-p2", 0, "P2"),
                                      ("z31a-p5", 2, "P5")])
def test_root_module_classes(ex, p, cls):
    rms = root_module_assignment(instantiate(ex, p).pair())
    got = {rm.root: rm.yclasses for rm in rms}
    for root, lab in ROOT_CLASSES[cls]:
        assert lab in got[root]


def test_first_pair_root_modules_by_root():
    rms = root_module_assignment(instantiate("z32-p1", 0).pair())
    got = {rm.root: rm.yclasses[0] for rm in rms}
    assert got == {(0, 1): "Y8", (1, 1): "Y1", (2, 1): "Y4", (1, 0): "Y1"}
