import pytest

from conftc.errors import SizeGuardError
from conftc.quotients import cached_surface
from conftc.surfaces import (
    SurfacePowerAlgebra,
    a_letter,
    b_letter,
    reduced_letter_basis,
    shifted_basis_products,
    cross_handle_relations,
    xy_pair_relations,
    omega_letter,
    surface_power,
    totaro_relations,
)

from oracles import poly_pow


def reduced_basis_count_formula(g, n):
    return 3**n + n * (2 * g - 1) * 3 ** (n - 1)


def test_local_multiply():
    alg = cached_surface(2, 1)
    w = omega_letter(2)
    assert alg.local_multiply(a_letter(1), b_letter(1)) == (w, 1)
    assert alg.local_multiply(b_letter(1), a_letter(1)) == (w, -1)
    assert alg.local_multiply(a_letter(2), b_letter(1)) is None
    assert alg.local_multiply(a_letter(1), a_letter(2)) is None
    assert alg.local_multiply(b_letter(1), b_letter(2)) is None
    assert alg.local_multiply(w, a_letter(1)) is None
    assert alg.local_multiply(w, w) is None
    assert alg.local_multiply(0, a_letter(2)) == (a_letter(2), 1)
    with pytest.raises(ValueError, match="generator out of range"):
        alg.local_multiply(a_letter(5), b_letter(1))


def test_generator_range_errors():
    alg = cached_surface(2, 2)
    with pytest.raises(ValueError, match="generator out of range"):
        alg.a(1, 3)
    with pytest.raises(ValueError, match="generator out of range"):
        alg.b(3, 1)
    with pytest.raises(ValueError, match="generator out of range"):
        alg.omega(0)


def test_multiply_dual_pair():
    alg = cached_surface(1, 2)
    assert alg.a(1) * alg.b(1) == alg.omega(1)
    assert alg.b(1) * alg.a(1) == -alg.omega(1)


def test_multiply_odd_letters_anticommute():
    alg = cached_surface(1, 2)
    lhs = alg.a(1) * alg.a(2)
    rhs = alg.a(2) * alg.a(1)
    assert lhs == -rhs
    assert lhs


def test_multiply_matches_pair_expansion():
    # (a_1 - a_2)(b_1 - b_2) expands to the degree-2 pair relation with j = 2
    alg = cached_surface(1, 2)
    lhs = (alg.a(1) - alg.a(2)) * (alg.b(1) - alg.b(2))
    rhs = alg.omega(2) + alg.omega(1) + alg.b(1) * alg.a(2) - alg.a(1) * alg.b(2)
    assert lhs == rhs


def test_surface_power_dimensions():
    alg = surface_power(1, 1)
    assert alg.dimension == 4
    assert alg.dimensions_by_degree() == [1, 2, 1]
    assert surface_power(2, 2).dimension == 36
    alg23 = cached_surface(2, 3)
    assert alg23.dimensions_by_degree() == poly_pow([1, 4, 1], 3)


def test_size_guard():
    with pytest.raises(SizeGuardError) as exc:
        SurfacePowerAlgebra(3, 3, max_basis=100)
    assert "512" in str(exc.value)


def test_size_guard_env(monkeypatch):
    monkeypatch.setenv("TCCONF_MAX_BASIS", "10")
    with pytest.raises(SizeGuardError):
        SurfacePowerAlgebra(1, 2)
    monkeypatch.setenv("TCCONF_MAX_BASIS", "100000")
    assert SurfacePowerAlgebra(1, 2).dimension == 16


def test_x_y_generators():
    alg = cached_surface(2, 3)
    assert alg.x(1, 1) == alg.a(1, 1)
    assert alg.x(3, 1) == alg.a(3, 1) - alg.a(1, 1)
    assert alg.y(2, 2) == alg.b(2, 2)
    assert alg.y(1, 1) == alg.b(1, 1)
    # definition round-trip: x_i(1) + a_1(1) = a_i(1) for i >= 2
    for i in (2, 3):
        assert alg.x(i, 1) + alg.a(1, 1) == alg.a(i, 1)
        assert alg.y(i, 1) + alg.b(1, 1) == alg.b(i, 1)
    with pytest.raises(ValueError, match="generator out of range"):
        alg.x(4, 1)
    with pytest.raises(ValueError, match="generator out of range"):
        alg.y(1, 3)


def test_totaro_relations():
    assert len(totaro_relations(cached_surface(1, 1))) == 0
    alg = cached_surface(1, 2)
    rels = totaro_relations(alg)
    assert rels.label == "TOTARO"
    assert len(rels) == 1
    expected = (
        alg.omega(1) + alg.omega(2) + alg.b(1) * alg.a(2) - alg.a(1) * alg.b(2)
    )
    assert rels.generators[0] == expected
    for g in (1, 2):
        rels3 = totaro_relations(cached_surface(g, 3))
        assert len(rels3) == 3
        assert all(r.degree() == 2 for r in rels3)


def test_cross_handle_relations():
    alg = cached_surface(2, 2)
    rels = cross_handle_relations(alg)
    gens = set()
    for r in rels:
        assert len(r.terms) == 1
        gens.add(next(iter(r.terms)))
    expected = set()
    for left in (a_letter(2), b_letter(2)):
        for right in (a_letter(2), b_letter(2)):
            expected.add((left, right))
    assert gens == expected
    assert len(cross_handle_relations(cached_surface(1, 3))) == 0
    # pair count times (2(g-1))^2 letters
    assert len(cross_handle_relations(cached_surface(3, 2))) == 16
    assert len(cross_handle_relations(cached_surface(2, 3))) == 3 * 4


def test_xy_pair_relations():
    alg = cached_surface(2, 3)
    rels = xy_pair_relations(alg)
    assert rels.label == "XY_PAIRS"
    assert len(rels) == 4
    expected = [
        alg.x(2) * alg.y(2),
        alg.x(2) * alg.y(3),
        alg.x(3) * alg.y(2),
        alg.x(3) * alg.y(3),
    ]
    assert list(rels.generators) == expected
    assert len(xy_pair_relations(cached_surface(2, 1))) == 0
    assert len(xy_pair_relations(cached_surface(1, 2))) == 1


def test_reduced_count_matches_enumeration_and_formula():
    for (g, n) in ((2, 2), (2, 3), (3, 2), (3, 3)):
        alg = cached_surface(g, n)
        reduced = reduced_letter_basis(alg)
        # independent enumeration: count basis monomials with at most one
        # letter outside {1, a(1), b(1)}
        count = 0
        for d in range(alg.top_degree + 1):
            for m in alg.monomials_of_degree(d):
                if sum(1 for c in m if c >= 3) <= 1:
                    count += 1
        assert len(reduced) == count == reduced_basis_count_formula(g, n)


def test_shifted_basis_same_cardinality():
    for (g, n) in ((2, 2), (2, 3), (3, 2)):
        alg = cached_surface(g, n)
        assert len(shifted_basis_products(alg)) == len(reduced_letter_basis(alg))


def test_reduced_genus_one_degenerates_to_full_basis():
    alg = cached_surface(1, 2)
    assert len(reduced_letter_basis(alg)) == alg.dimension
    assert len(shifted_basis_products(alg)) == alg.dimension


def test_omega_x_chain_stays_in_reduced_span():
    # w_1 x_2 ... x_n expands into monomials with a single special letter
    alg = cached_surface(2, 3)
    e = alg.omega(1) * alg.x(2) * alg.x(3)
    reduced_monos = {next(iter(b.terms)) for b in reduced_letter_basis(alg)}
    assert e.terms
    assert set(e.terms) <= reduced_monos


def test_shifted_basis_elements_are_homogeneous():
    alg = cached_surface(2, 2)
    for combo, e in shifted_basis_products(alg):
        assert e.is_homogeneous()
        assert not e.is_zero()
