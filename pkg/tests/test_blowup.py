import random
from itertools import product

import pytest

from zdgdim import (BlowupSpec, InvalidSpec, NotZeroDistributive,
                    boolean_lattice, build_blowup, canonical_blowup_of,
                    labeled_equal, m_lattice, product_of_chains,
                    random_blowup_spec, zero_divisor_graph)


def test_spec_validation():
    BlowupSpec(3, {1: 2, 6: 3})
    with pytest.raises(InvalidSpec):
        BlowupSpec(0, {})
    with pytest.raises(InvalidSpec):
        BlowupSpec(3, {7: 2})          # full mask is never blown
    with pytest.raises(InvalidSpec):
        BlowupSpec(3, {0: 2})
    with pytest.raises(InvalidSpec):
        BlowupSpec(3, {1: 0})


def test_spec_counts(fig3_spec):
    assert fig3_spec.total_vertices() == 12
    assert fig3_spec.singleton_atom_count() == 1
    assert BlowupSpec(4, {}).total_vertices() == 14
    assert BlowupSpec(3, {}).singleton_atom_count() == 3


def test_spec_json_round_trip(fig3_spec):
    data = fig3_spec.to_json_dict()
    assert data == {"n": 3, "chains": {"001": 3, "011": 2, "100": 2,
                                       "101": 3}}
    assert BlowupSpec.from_json_dict(data) == fig3_spec.normalized()
    with pytest.raises(InvalidSpec):
        BlowupSpec.from_json_dict({"n": 3, "chains": {"11": 2}})


def test_boolean_lattice_basics():
    L = boolean_lattice(3)
    assert len(L) == 8
    assert L.atoms() == ["(1,0,0)", "(0,1,0)", "(0,0,1)"]
    assert L.meet("(1,1,0)", "(0,1,1)") == "(0,1,0)"
    assert L.join("(1,0,0)", "(0,0,1)") == "(1,0,1)"
    assert len(L.zero_divisors()) == 6
    assert boolean_lattice(1).labels == ("(0)", "(1)")


def test_identity_blowup_is_the_boolean_lattice():
    for n in (1, 2, 3, 4):
        assert build_blowup(BlowupSpec(n, {})) == boolean_lattice(n)


def test_figure3_blowup_structure(fig3_spec, fig3_lattice):
    LB = fig3_lattice
    assert len(LB) == 14
    assert len(LB.zero_divisors()) == 12
    assert LB.is_lattice()
    assert LB.is_pseudocomplemented()
    assert LB.dual().is_pseudocomplemented()
    # meet of the chain bottoms of {1,2} and {1,3} is the top of chain 1
    assert LB.meet("(1,1,0)", "(1,0,1)") == "(3,0,0)"
    assert LB.meet("(1,1,0)", "(0,0,1)") == "(0,0,0)"
    assert LB.join("(1,0,0)", "(0,1,0)") == "(1,1,0)"
    # pseudocomplement of an atom is the top of the complementary chain
    assert LB.pseudocomplement("(1,0,0)") == "(0,1,1)"
    assert LB.pseudocomplement("(0,1,1)") == "(3,0,0)"


def test_blowup_meets_depend_only_on_masks(fig3_lattice):
    # literal mask-only meets and joins hold for incomparable masks; for
    # nested masks the meet is the lower element itself, so only the
    # annihilator class of the result is mask-determined
    LB = fig3_lattice
    part = LB.quotient_classes()
    img = part.boolean_image
    zstar = LB.zero_divisors()
    for x in zstar:
        for y in zstar:
            cx = part.class_of[LB.index(x)]
            cy = part.class_of[LB.index(y)]
            if cx == cy:
                continue
            x0 = LB.labels[part.classes[cx][0]]
            y0 = LB.labels[part.classes[cy][0]]
            mx, my = img[cx], img[cy]
            if mx & ~my and my & ~mx:
                assert LB.meet(x, y) == LB.meet(x0, y0)
                assert LB.join(x, y) == LB.join(x0, y0)
            cls = part.class_of
            assert cls[LB.index(LB.meet(x, y))] == cls[LB.index(LB.meet(x0, y0))]
            assert cls[LB.index(LB.join(x, y))] == cls[LB.index(LB.join(x0, y0))]


def test_blowup_complement_identities(fig3_lattice):
    LB = fig3_lattice
    top, bottom = LB.labels[LB.top], LB.labels[LB.bottom]
    for x in LB.labels:
        star = LB.pseudocomplement(x)
        assert LB.meet(x, star) == bottom
        assert LB.join(x, star) == top


def test_canonical_blowup_of_products_of_chains():
    for sizes in product((2, 3), repeat=3):
        P = product_of_chains(list(sizes))
        spec, relab = canonical_blowup_of(P)
        assert spec.n == 3
        expected_total = 1
        for c in sizes:
            expected_total *= c
        dense = 1
        for c in sizes:
            dense *= c - 1
        assert spec.total_vertices() == expected_total - dense - 1
        G1 = zero_divisor_graph(P).relabeled(relab)
        G2 = zero_divisor_graph(build_blowup(spec))
        assert labeled_equal(G1, G2)


def test_canonical_blowup_round_trip(spec_corpus):
    for _, spec in spec_corpus:
        back, relab = canonical_blowup_of(build_blowup(spec))
        assert back == spec.normalized()
        # the relabeling must fix every zero divisor label
        LB = build_blowup(spec)
        assert set(relab) == set(LB.zero_divisors())
        assert all(relab[lab] == lab for lab in relab)


def test_canonical_blowup_of_boolean_lattice():
    spec, relab = canonical_blowup_of(boolean_lattice(3))
    assert spec == BlowupSpec(3, {})
    assert all(k == v for k, v in relab.items())


def test_canonical_blowup_figure2(fig2_lattice):
    spec, relab = canonical_blowup_of(fig2_lattice)
    assert spec.n == 2
    assert dict(spec.chain_sizes) == {1: 5, 2: 2}
    G1 = zero_divisor_graph(fig2_lattice).relabeled(relab)
    G2 = zero_divisor_graph(build_blowup(spec))
    assert labeled_equal(G1, G2)
    # K_{2,5}: every size-5-class vertex meets every size-2-class vertex
    assert G2.n == 7 and G2.edge_count() == 10


def test_canonical_blowup_rejects_m3():
    with pytest.raises(NotZeroDistributive):
        canonical_blowup_of(m_lattice(3))


def test_random_spec_generator_is_deterministic():
    a = [random_blowup_spec(random.Random(7)) for _ in range(3)]
    b = [random_blowup_spec(random.Random(7)) for _ in range(3)]
    assert a == b
    rng = random.Random(11)
    for _ in range(20):
        spec = random_blowup_spec(rng)
        assert spec.n in (3, 4)
        assert all(1 <= s <= 3 for s in spec.chain_sizes.values())
