import itertools

import numpy as np
import pytest

from genusrep.graphs import (
    GraphVerdict,
    MatrixGraph,
    count_walks,
    enumerate_small_graphs,
    forbidden_check,
    graph_of,
    is_connected,
)


def cycle_graph(n):
    return MatrixGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return MatrixGraph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n):
    return MatrixGraph(n, [(0, i) for i in range(1, n)])


TYPE_I = MatrixGraph(2, [(0, 1)])
TYPE_II = MatrixGraph(2, [(0, 1), (0, 0), (1, 1)])
TYPE_III = MatrixGraph(2, [(0, 1), (0, 0)])


def brute_walk_count(g, i, j, length):
    """Enumerate walks recursively, independent of the adjacency powers."""
    neighbors = [[] for _ in range(g.n)]
    for a, b in g.edges:
        neighbors[a].append(b)
        if a != b:
            neighbors[b].append(a)
    count = 0
    frontier = [(i, 0)]
    while frontier:
        v, steps = frontier.pop()
        if steps == length:
            count += v == j
            continue
        for w in neighbors[v]:
            frontier.append((w, steps + 1))
    return count


class TestGraphOf:
    def test_type_I_pattern(self):
        y = np.array([[0.0, 2.0 - 1j], [2.0 + 1j, 0.0]])
        assert graph_of(y).edges == TYPE_I.edges

    def test_type_II_pattern(self):
        y = np.array([[0.5, 2.0], [2.0, 0.5]], dtype=complex)
        assert graph_of(y).edges == TYPE_II.edges

    def test_zero_matrix(self):
        assert graph_of(np.zeros((3, 3))).edges == frozenset()

    def test_relative_threshold(self):
        y = np.array([[1e-15, 1.0], [1.0, 0.0]], dtype=complex)
        assert graph_of(y).edges == frozenset({(0, 1)})
        assert graph_of(y, tol=0.0).edges == frozenset({(0, 0), (0, 1)})

    def test_rejects_nonhermitian(self):
        with pytest.raises(ValueError):
            graph_of(np.array([[0.0, 1.0], [2.0, 0.0]]))


class TestConnectivity:
    def test_examples(self):
        assert is_connected(TYPE_I)
        assert not is_connected(MatrixGraph(3, [(0, 1)]))
        assert is_connected(star_graph(3))
        assert is_connected(MatrixGraph(1))
        assert not is_connected(MatrixGraph(2, [(0, 0), (1, 1)]))


class TestCountWalks:
    def test_path_example(self):
        assert count_walks(path_graph(3), 0, 1, 3) == 2

    def test_triangle_closed_walks(self):
        assert count_walks(cycle_graph(3), 0, 0, 3) == 2

    def test_length_zero(self):
        g = cycle_graph(4)
        assert count_walks(g, 1, 1, 0) == 1
        assert count_walks(g, 1, 2, 0) == 0

    def test_loops_count_as_steps(self):
        assert count_walks(TYPE_III, 1, 1, 3) == 1
        assert count_walks(MatrixGraph(1, [(0, 0)]), 0, 0, 5) == 1

    def test_against_brute_enumeration(self):
        for n in (2, 3, 4):
            for g in enumerate_small_graphs(n):
                for i, j, length in itertools.product(range(n), range(n), range(5)):
                    assert count_walks(g, i, j, length) == brute_walk_count(g, i, j, length)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            count_walks(TYPE_I, 0, 5, 2)
        with pytest.raises(ValueError):
            count_walks(TYPE_I, 0, 1, -1)


class TestForbiddenCheck:
    @pytest.mark.parametrize("n", [3, 5, 7, 8, 9, 10])
    def test_forbidden_cycles(self, n):
        verdict = forbidden_check(cycle_graph(n))
        assert verdict.forbidden
        assert verdict.rule == "cycle-length"
        assert verdict.witness == (n,)

    @pytest.mark.parametrize("n", [4, 6])
    def test_allowed_cycles(self, n):
        assert not forbidden_check(cycle_graph(n)).forbidden

    def test_type_III_unique_walk(self):
        verdict = forbidden_check(TYPE_III)
        assert verdict.forbidden
        assert verdict.rule == "unique-walk"
        i, j = verdict.witness
        assert (i, j) == (1, 1)  # the loop-free vertex walks back to itself
        assert count_walks(TYPE_III, i, j, 3) == 1
        assert not TYPE_III.has_edge(i, j)

    def test_admissible_two_vertex_graphs(self):
        assert not forbidden_check(TYPE_I).forbidden
        assert not forbidden_check(TYPE_II).forbidden

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_long_paths_forbidden(self, n):
        verdict = forbidden_check(path_graph(n))
        assert verdict.forbidden
        assert verdict.rule == "tree-diameter"

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_stars_not_excluded(self, n):
        assert not forbidden_check(star_graph(n)).forbidden

    def test_disconnected_not_excluded(self):
        g = MatrixGraph(2, [(0, 0), (1, 1)])
        assert not forbidden_check(g).forbidden

    def test_forbidden_witnesses_verify_independently(self):
        for n in (2, 3, 4):
            for g in enumerate_small_graphs(n):
                verdict = forbidden_check(g)
                if not verdict.forbidden or verdict.rule != "unique-walk":
                    continue
                i, j = verdict.witness
                assert brute_walk_count(g, i, j, 3) == 1
                assert not g.has_edge(i, j)


def canonical_form(g):
    best = None
    for perm in itertools.permutations(range(g.n)):
        ed = frozenset((min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in g.edges)
        key = tuple(sorted(ed))
        if best is None or key < best:
            best = key
    return best


class TestEnumeration:
    def test_counts_small(self):
        assert len(list(enumerate_small_graphs(1))) == 2
        assert len(list(enumerate_small_graphs(2))) == 3

    def test_loopless_three_vertex_classes(self):
        loopless = [g for g in enumerate_small_graphs(3) if not g.loops()]
        assert len(loopless) == 2  # the path and the triangle

    def test_no_two_isomorphic(self):
        for n in (2, 3, 4):
            graphs = list(enumerate_small_graphs(n))
            forms = [canonical_form(g) for g in graphs]
            assert len(forms) == len(set(forms))

    def test_matches_brute_canonicalization(self):
        # independent enumeration: canonicalize every connected labeled
        # loop-graph and count the distinct classes
        for n in (2, 3, 4):
            slots = [(i, i) for i in range(n)] + list(itertools.combinations(range(n), 2))
            classes = set()
            for bits in itertools.product((0, 1), repeat=len(slots)):
                edges = [s for s, b in zip(slots, bits) if b]
                g = MatrixGraph(n, edges)
                if is_connected(g):
                    classes.add(canonical_form(g))
            assert len(list(enumerate_small_graphs(n))) == len(classes)

    def test_all_connected(self):
        for n in (1, 2, 3, 4, 5):
            for g in enumerate_small_graphs(n):
                assert is_connected(g)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            list(enumerate_small_graphs(0))
        with pytest.raises(ValueError):
            list(enumerate_small_graphs(6))


def test_graph_verdict_status_strings():
    assert GraphVerdict(forbidden=True, rule="cycle-length", witness=(5,)).status == "Forbidden"
    assert GraphVerdict(forbidden=False).status == "NotExcluded"


def test_matrix_graph_validation():
    with pytest.raises(ValueError):
        MatrixGraph(0)
    with pytest.raises(ValueError):
        MatrixGraph(2, [(0, 2)])
    g = MatrixGraph(3, [(2, 0)])
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
