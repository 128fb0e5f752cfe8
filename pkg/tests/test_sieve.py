import math
import random

import pytest

from ordhomeo.errors import DomainError, ParseError, ResourceError
from ordhomeo.sieve import (
    ConstraintSystem,
    FinitePermutation,
    PartialInjection,
    below,
    chain_limit,
    contains,
    extend_to_permutation,
    format_constraints,
    format_injection,
    format_permutation,
    hall_brute,
    normalize,
    parse_constraints,
    parse_injection,
    satisfiable,
)
from ordhomeo.ordinals import OMEGA, ONE, Ordinal

from helpers import o


def cs(*items):
    return ConstraintSystem.of([(Ordinal(p) if isinstance(p, int) else p,
                                 [Ordinal(v) if isinstance(v, int) else v for v in vals])
                                for p, vals in items])


def random_system(rng, max_points=12, pool_size=8):
    pool = [Ordinal(v) for v in range(pool_size)]
    n = rng.randint(1, max_points)
    items = []
    for _ in range(n):
        p = OMEGA * rng.randint(0, 3) + rng.randint(0, 9)
        vals = rng.sample(pool, rng.randint(1, min(3, pool_size)))
        items.append((p, vals))
    return ConstraintSystem.of(items)


class TestNormalize:
    def test_merges_by_intersection(self):
        n = normalize(cs((1, [2, 3]), (1, [3, 4])))
        assert n.constraints == ((ONE, frozenset({Ordinal(3)})),)

    def test_identity_on_clean_systems(self):
        n = normalize(cs((1, [2])))
        assert n.constraints == ((ONE, frozenset({Ordinal(2)})),)

    def test_flags_empty_intersection(self):
        n = normalize(cs((1, [2]), (1, [3])))
        assert n.syntactically_unsatisfiable()

    def test_sorts_points(self):
        n = normalize(cs((5, [1]), (2, [1])))
        assert n.points == [Ordinal(2), Ordinal(5)]


class TestSatisfiable:
    def test_forced_then_free(self):
        w = satisfiable(cs((1, [7]), (2, [7, 8])))
        assert w.as_mapping() == {ONE: Ordinal(7), Ordinal(2): Ordinal(8)}

    def test_pigeonhole(self):
        assert satisfiable(cs((1, [7, 8]), (2, [7, 8]), (3, [7, 8]))) is None

    def test_witness_satisfies(self):
        rng = random.Random(70)
        for _ in range(200):
            system = random_system(rng)
            w = satisfiable(system)
            if w is not None:
                m = w.as_mapping()
                assert len(set(m.values())) == len(m)
                for p, vals in normalize(system).constraints:
                    assert m[p] in vals

    def test_agrees_with_hall_brute(self):
        rng = random.Random(71)
        for _ in range(300):
            system = random_system(rng)
            assert (satisfiable(system) is not None) == hall_brute(system)

    def test_hall_brute_size_limit(self):
        big = cs(*[(i, [i]) for i in range(25)])
        with pytest.raises(ResourceError):
            hall_brute(big)


class TestContains:
    def test_relaxation(self):
        assert contains(cs((1, [7])), cs((1, [7, 8])))

    def test_unrelated_point(self):
        assert not contains(cs((1, [7])), cs((2, [7])))

    def test_strict_shrink(self):
        assert not contains(cs((1, [7, 8])), cs((1, [7])))

    def test_vacuous_when_left_unsatisfiable(self):
        assert contains(cs((1, [7]), (1, [8])), cs((2, [5])))

    def test_antisymmetric_up_to_normalization(self):
        rng = random.Random(72)
        for _ in range(200):
            a, b = random_system(rng), random_system(rng)
            if satisfiable(a) is None or satisfiable(b) is None:
                continue
            if contains(a, b) and contains(b, a):
                assert normalize(a) == normalize(b)

    def test_below_requires_satisfiable(self):
        with pytest.raises(DomainError):
            below(cs((1, [7]), (1, [8])), cs((1, [7])))

    def test_below_reflexive_transitive(self):
        rng = random.Random(73)
        systems = [s for s in (random_system(rng, max_points=5) for _ in range(60))
                   if satisfiable(s) is not None]
        for s in systems:
            assert below(s, s)
        for a in systems[:12]:
            for b in systems[:12]:
                for c in systems[:12]:
                    if below(a, b) and below(b, c):
                        assert below(a, c)


def shrink_step(rng, system):
    """One refinement: shrink some allowed set or add a constraint,
    keeping satisfiability."""
    base = normalize(system).constraints
    for _ in range(30):
        items = [(p, set(vals)) for p, vals in base]
        if rng.random() < 0.5 and items:
            i = rng.randrange(len(items))
            p, vals = items[i]
            if len(vals) > 1:
                vals.discard(rng.choice(sorted(vals)))
                items[i] = (p, vals)
        else:
            items.append((OMEGA * rng.randint(0, 3) + rng.randint(10, 19),
                          {Ordinal(v) for v in rng.sample(range(8), rng.randint(1, 3))}))
        candidate = ConstraintSystem.of(items)
        if satisfiable(candidate) is not None:
            return candidate
    return system


class TestChains:
    def test_constant_chain(self):
        a = cs((1, [7, 8]))
        limit, witness = chain_limit([a, a, a])
        assert normalize(limit) == normalize(a)
        assert witness.as_mapping()[ONE] in {Ordinal(7), Ordinal(8)}

    def test_shrinking_chain(self):
        chain = [cs((1, [5, 6, 7])), cs((1, [5, 6])), cs((1, [5]))]
        limit, witness = chain_limit(chain)
        assert normalize(limit).constraints == ((ONE, frozenset({Ordinal(5)})),)
        assert witness.as_mapping() == {ONE: Ordinal(5)}

    def test_violation_detected(self):
        with pytest.raises(DomainError, match="chain violation"):
            chain_limit([cs((1, [5])), cs((1, [5, 6]))])

    def test_random_chains(self):
        rng = random.Random(74)
        for _ in range(60):
            system = random_system(rng, max_points=6)
            if satisfiable(system) is None:
                continue
            chain = [system]
            for _ in range(rng.randint(1, 8)):
                chain.append(shrink_step(rng, chain[-1]))
            limit, witness = chain_limit(chain)
            mapping = witness.as_mapping()
            for member in chain:
                for p, vals in normalize(member).constraints:
                    assert mapping[p] in vals

    def test_empty_chain(self):
        with pytest.raises(DomainError):
            chain_limit([])


class TestExtend:
    def test_single_pair_closes_to_transposition(self):
        perm = extend_to_permutation(PartialInjection(((ONE, Ordinal(5)),)))
        assert perm.cycles == ((ONE, Ordinal(5)),)
        assert perm.apply(Ordinal(5)) == ONE

    def test_chain_closes_to_cycle(self):
        h = PartialInjection(((ONE, Ordinal(2)), (Ordinal(2), Ordinal(3))))
        perm = extend_to_permutation(h)
        assert perm.cycles == ((ONE, Ordinal(2), Ordinal(3)),)

    def test_existing_cycle_preserved(self):
        h = PartialInjection(((ONE, Ordinal(2)), (Ordinal(2), ONE)))
        perm = extend_to_permutation(h)
        assert perm.cycles == ((ONE, Ordinal(2)),)

    def test_fixed_points_dropped(self):
        perm = extend_to_permutation(PartialInjection(((OMEGA, OMEGA),)))
        assert perm.is_identity

    def test_random_injections(self):
        rng = random.Random(75)
        universe = [OMEGA * a + b for a in range(4) for b in range(6)]
        for _ in range(100):
            froms = rng.sample(universe, rng.randint(0, 10))
            tos = rng.sample(universe, len(froms))
            h = PartialInjection(tuple(zip(froms, tos)))
            perm = extend_to_permutation(h)
            for a, b in h.pairs:
                assert perm.apply(a) == b
            support = perm.support()
            image = {perm.apply(x) for x in support}
            assert image == support  # bijection on its support
            # the order (lcm of cycle lengths) divides |support|!, so
            # iterating |support|! times is the identity on the support
            order = math.lcm(*(len(c) for c in perm.cycles)) if perm.cycles else 1
            assert math.factorial(len(support)) % order == 0
            for x in support:
                y = x
                for _ in range(order):
                    y = perm.apply(y)
                assert y == x

    def test_invalid_injection(self):
        with pytest.raises(DomainError):
            extend_to_permutation(PartialInjection(((ONE, Ordinal(2)), (ONE, Ordinal(3)))))


class TestTextFormats:
    def test_garbage_lines_raise_cleanly(self):
        rng = random.Random(76)
        alphabet = "w0123456789+*^(){}:,-> #"
        for parse in (parse_constraints, parse_injection):
            for _ in range(500):
                text = "\n".join(
                    "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 16)))
                    for _ in range(rng.randint(1, 3)))
                try:
                    parse(text)
                except (ParseError, DomainError, ResourceError):
                    pass

    def test_constraints_round_trip(self):
        text = "1 : { 2, 3 }\nw : { 0, w*2 }\n"
        system = parse_constraints(text)
        assert format_constraints(normalize(system)) == text

    def test_empty_set_round_trip(self):
        system = normalize(parse_constraints("1 : { 2 }\n1 : { 3 }\n"))
        text = format_constraints(system)
        assert text == "1 : { }\n"
        assert parse_constraints(text).syntactically_unsatisfiable()

    def test_injection_round_trip(self):
        text = "3 -> 7\nw -> w*2\n"
        h = parse_injection(text)
        assert format_injection(h) == text

    def test_permutation_format(self):
        perm = extend_to_permutation(parse_injection("3 -> 7\n"))
        assert format_permutation(perm) == "(3 7)\n"
        assert format_permutation(FinitePermutation(())) == "# identity\n"
