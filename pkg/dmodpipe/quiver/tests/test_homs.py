from sympy import Matrix

from dmodpipe.quiver import (DiskQuad, MonodromyPair, canonical_morphism,
                             hom_space, j_mid, j_shriek, j_star,
                             pairs_isomorphic, quads_isomorphic)
from dmodpipe.utils import RandomObjectGenerator, rank


def flatten(morphism):
    return list(morphism.phi_v) + list(morphism.phi_vp)


def test_endomorphisms_contain_identity():
    quad = DiskQuad([[1, 0]], [[0], [1]])
    dim, basis = hom_space(quad, quad)
    assert dim >= 1
    assert all(m.is_morphism(quad, quad) for m in basis)


def test_hom_contains_canonical_morphism():
    p = MonodromyPair([[2, 1], [0, 2]])
    source, target = j_star(p), j_shriek(p)
    dim, basis = hom_space(source, target)
    spanned = Matrix([flatten(m) for m in basis])
    extended = Matrix.vstack(spanned,
                             Matrix([flatten(canonical_morphism(p))]))
    assert rank(extended) == rank(spanned) == dim


def test_hom_between_coprime_monodromies():
    two = j_star(MonodromyPair([[2]]))
    three = j_star(MonodromyPair([[3]]))
    assert hom_space(two, three) == (0, [])


def test_hom_of_empty_quads():
    empty = DiskQuad([], [], dim_v=0, dim_vp=0)
    assert hom_space(empty, empty) == (0, [])
    assert quads_isomorphic(empty, empty)


def test_pairs_isomorphic():
    assert pairs_isomorphic(MonodromyPair([[1, 1], [0, 1]]),
                            MonodromyPair([[1, 0], [5, 1]]))
    assert not pairs_isomorphic(MonodromyPair([[1, 1], [0, 1]]),
                                MonodromyPair([[1, 0], [0, 1]]))
    # same characteristic polynomial, different Jordan type
    assert not pairs_isomorphic(
        MonodromyPair([[2, 1, 0], [0, 2, 0], [0, 0, 2]]),
        MonodromyPair([[2, 0, 0], [0, 2, 0], [0, 0, 2]]),
    )


def test_quads_isomorphic():
    unipotent = MonodromyPair([[1, 1], [0, 1]])
    assert not quads_isomorphic(j_star(unipotent), j_mid(unipotent))
    assert not quads_isomorphic(j_star(unipotent), j_shriek(unipotent))
    trivial = MonodromyPair([[1]])
    assert not quads_isomorphic(j_star(trivial), j_shriek(trivial))


def test_random_self_isomorphism():
    generator = RandomObjectGenerator(seed=7, max_dim=3)
    for _ in range(20):
        quad = generator.random_quad()
        assert quads_isomorphic(quad, quad)
