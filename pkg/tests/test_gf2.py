import itertools

from wlmotif.gf2 import Gf2System, rank_of


def brute_solutions(sys):
    return [x for x in itertools.product((0, 1), repeat=sys.nvars) if sys.check(list(x))]


def random_system(rng, nvars, nrows):
    sys = Gf2System(nvars)
    for _ in range(nrows):
        sys.add([v for v in range(nvars) if rng.random() < 0.4], rng.randint(0, 1))
    return sys


def test_small_examples():
    sys = Gf2System(2)
    sys.add([0, 1], 1)
    assert sys.solution_count() == 2 and sys.rank() == 1
    sys.add([0, 1], 0)
    assert not sys.is_consistent() and sys.solve() is None and sys.solution_count() == 0
    assert Gf2System(3).solution_count() == 8


def test_counts_and_solutions_match_enumeration(rng):
    for _ in range(300):
        sys = random_system(rng, rng.randint(1, 8), rng.randint(0, 9))
        sols = brute_solutions(sys)
        assert sys.solution_count() == len(sols)
        x = sys.solve()
        assert (x is None) == (not sols)
        if x is not None:
            assert sys.check(x)


def test_rank_of_matches_span_size(rng):
    for _ in range(100):
        rows = [rng.getrandbits(6) for _ in range(rng.randint(0, 7))]
        span = {0}
        for r in rows:
            span |= {s ^ r for s in span}
        assert 2 ** rank_of(rows) == len(span)
