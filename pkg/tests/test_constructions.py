import pytest

import oracle
from tepc import constructions as cons
from tepc.constructions import (
    Family,
    Source,
    Variant,
    case_of,
    label_corona_path_cycle,
    label_corona_path_path,
    label_fan,
    label_wheel,
    predicted_tally,
)
from tepc.errors import InvalidParameter, NotLabelable
from tepc.graphs import build_fan, build_wheel
from tepc.labeling import induced_vertex_labels, is_tepc, tally


def counts(t):
    return (t.e0, t.e1, t.v0, t.v1, t.gap)


def tally_of(result):
    return tally(result.graph, result.labeling)


class TestCaseDispatch:
    @pytest.mark.parametrize(
        "family, n, m, variant",
        [
            ("PP", 6, 5, Variant.EVEN_SPINE),
            ("PC", 1, 7, Variant.WHEEL_BASE),
            ("PP", 5, 4, Variant.ODD_SPINE_EVEN_COPY),
            ("PP", 5, 5, Variant.ODD_SPINE_ODD_COPY),
            ("PP", 1, 1, Variant.DEGENERATE),
            ("PP", 1, 4, Variant.FAN_BASE),
            ("PC", 3, 4, Variant.ODD_SPINE_EVEN_COPY),
            ("pc", 2, 3, Variant.EVEN_SPINE),
        ],
    )
    def test_variants(self, family, n, m, variant):
        assert case_of(family, n, m).variant is variant

    def test_invalid(self):
        with pytest.raises(InvalidParameter):
            case_of("PC", 2, 2)
        with pytest.raises(InvalidParameter):
            case_of("PP", 0, 2)
        with pytest.raises(InvalidParameter):
            case_of("XX", 2, 2)


class TestPathPath:
    def test_degenerate_rejected(self):
        with pytest.raises(NotLabelable, match=r"degree sequence of \(1,1\)"):
            label_corona_path_path(1, 1)

    @pytest.mark.parametrize(
        "n, m, expected",
        [
            (4, 3, (11, 12, 8, 8, -1)),
            (3, 2, (5, 6, 5, 4, 0)),
            (3, 3, (8, 9, 7, 5, 1)),
            (2, 1, (1, 2, 2, 2, -1)),
        ],
    )
    def test_tallies(self, n, m, expected):
        result = label_corona_path_path(n, m)
        assert counts(tally_of(result)) == expected

    def test_two_one_confirmed_by_oracle(self):
        r = label_corona_path_path(2, 1)
        assert oracle.count_tepc(r.graph.vertex_count, r.graph.edges) > 0
        assert oracle.naive_tally(r.graph.vertex_count, r.graph.edges, r.labeling.labels)[4] == -1

    def test_fan_base_delegates(self):
        r = label_corona_path_path(1, 4)
        assert r.case.variant is Variant.FAN_BASE
        assert r.graph == build_fan(4)
        assert r.labeling.labels == label_fan(4)[1].labels

    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("m", range(1, 9))
    def test_always_tepc(self, n, m):
        if (n, m) == (1, 1):
            return
        r = label_corona_path_path(n, m)
        assert abs(tally_of(r).gap) <= 1


class TestPathCycle:
    @pytest.mark.parametrize(
        "n, m, expected",
        [
            (2, 3, (6, 7, 4, 4, -1)),
            (3, 4, (12, 14, 8, 7, -1)),
            (3, 3, (9, 11, 7, 5, 0)),
        ],
    )
    def test_tallies(self, n, m, expected):
        assert counts(tally_of(label_corona_path_cycle(n, m))) == expected

    def test_three_three_by_independent_recount(self):
        r = label_corona_path_cycle(3, 3)
        assert oracle.naive_tally(r.graph.vertex_count, r.graph.edges, r.labeling.labels) == (9, 11, 7, 5, 0)

    def test_wheel_base(self):
        r = label_corona_path_cycle(1, 3)
        assert r.case.variant is Variant.WHEEL_BASE
        assert r.graph == build_wheel(3)
        assert abs(tally_of(r).gap) <= 1

    def test_short_cycle_rejected(self):
        with pytest.raises(InvalidParameter):
            label_corona_path_cycle(2, 2)

    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("m", range(3, 9))
    def test_always_tepc(self, n, m):
        assert abs(tally_of(label_corona_path_cycle(n, m)).gap) <= 1


class TestPredictedTally:
    def test_even_spine(self):
        p = predicted_tally("PP", 4, 3)
        assert (p.e0, p.e1, p.v0, p.v1, p.source) == (11, 12, 8, 8, Source.PAPER)

    def test_pc_odd_odd_corrected(self):
        p = predicted_tally("PC", 3, 3)
        assert (p.e0, p.e1, p.v0, p.v1, p.source) == (9, 11, 7, 5, Source.CORRECTED)
        assert (p.stated_v0, p.stated_v1) == (6, 6)

    def test_pp_odd_m1_corrected(self):
        p = predicted_tally("PP", 3, 1)
        assert (p.v0, p.v1, p.source) == (3, 3, Source.CORRECTED)
        assert (p.stated_v0, p.stated_v1) == (4, 2)

    def test_n1_has_no_formula(self):
        with pytest.raises(InvalidParameter):
            predicted_tally("PP", 1, 3)

    @pytest.mark.parametrize("family, mrange", [("PP", range(1, 9)), ("PC", range(3, 9))])
    def test_equals_constructed_tally(self, family, mrange):
        for n in range(2, 9):
            for m in mrange:
                p = predicted_tally(family, n, m)
                t = tally_of(cons.label_corona(family, n, m))
                assert p.matches(t), (family, n, m)
                assert p.e0 + p.e1 == t.e0 + t.e1
                assert p.v0 + p.v1 == n * (1 + m)


def _copy_labels(result, i):
    lay = result.layout
    f = result.labeling
    edges = [lay.link_edge(i, j) for j in range(1, lay.m + 1)]
    edges += [lay.copy_edge(i, j) for j in range(1, lay.m)]
    if lay.closed:
        edges.append(lay.closure_edge(i))
    return {f.label_of(*e) for e in edges}


@pytest.mark.parametrize("family, mrange", [("PP", range(1, 9)), ("PC", range(3, 9))])
def test_copies_below_threshold_zero_above_one(family, mrange):
    for n in range(2, 9):
        for m in mrange:
            r = cons.label_corona(family, n, m)
            for i in range(1, n + 1):
                if n % 2 == 0:
                    assert _copy_labels(r, i) == ({0} if 2 * i <= n else {1}), (n, m, i)
                elif 2 * i < n + 1:
                    assert _copy_labels(r, i) == {0}, (n, m, i)
                elif 2 * i > n + 1:
                    assert _copy_labels(r, i) == {1}, (n, m, i)
                else:
                    # a single-vertex middle copy has no room to split
                    expected = {1} if m == 1 else {0, 1}
                    assert _copy_labels(r, i) == expected


@pytest.mark.parametrize("n", range(2, 12))
@pytest.mark.parametrize("m", range(1, 12))
def test_rule_ranges_partition_indices(n, m):
    # _piecewise raises unless exactly one branch holds
    for i in range(1, n):
        cons._spine_rule(n, i)
    for i in range(1, n + 1):
        cons._closure_rule(n, i)
        for j in range(1, m + 1):
            cons._link_rule(n, m, i, j)
        for j in range(1, m):
            cons._copy_rule(n, m, i, j)


def test_piecewise_rejects_overlap_and_gap():
    with pytest.raises(AssertionError):
        cons._piecewise(True, True, "x")
    with pytest.raises(AssertionError):
        cons._piecewise(False, False, "x")


def test_middle_copy_split_odd_odd():
    r = label_corona_path_path(5, 5)
    lay = r.layout
    assert [r.labeling.label_of(*lay.link_edge(3, j)) for j in range(1, 6)] == [0, 0, 1, 1, 1]
    assert [r.labeling.label_of(*lay.copy_edge(3, j)) for j in range(1, 5)] == [0, 0, 1, 1]
    vertex = induced_vertex_labels(r.graph, r.labeling).labels
    assert [vertex[lay.copy_vertex(3, j)] for j in range(1, 6)] == [0, 0, 0, 1, 1]


class TestFanWheel:
    def test_wheel_three(self):
        g, f = label_wheel(3)
        t = tally(g, f)
        assert (t.e0, t.v0, t.gap) == (2, 3, 0)

    def test_fan_two(self):
        g, f = label_fan(2)
        t = tally(g, f)
        assert (t.e0, t.v0, t.gap) == (1, 2, 0)
        assert g.vertex_count + g.edge_count == 6

    def test_fan_three(self):
        g, f = label_fan(3)
        t = tally(g, f)
        assert (t.e0 + t.v0, g.vertex_count + g.edge_count, t.gap) == (5, 9, 1)
        assert oracle.count_tepc(g.vertex_count, g.edges) > 0

    @pytest.mark.parametrize("m", range(2, 15))
    def test_fans(self, m):
        assert is_tepc(*label_fan(m))

    @pytest.mark.parametrize("m", range(3, 15))
    def test_wheels(self, m):
        assert is_tepc(*label_wheel(m))

    def test_minimums(self):
        with pytest.raises(InvalidParameter):
            label_fan(1)
        with pytest.raises(InvalidParameter):
            label_wheel(2)

    def test_fallback_search_used_when_construction_fails(self, monkeypatch):
        g = build_wheel(4)
        monkeypatch.setattr(cons, "_prefix_block", lambda m, c, rim, g: cons.EdgeLabeling(g, (1,) * g.edge_count))
        g2, f = label_wheel(4)
        assert g2 == g
        assert is_tepc(g, f)


def test_family_enum_accepts_strings():
    assert cons.label_corona("pp", 2, 2).case.family is Family.PP
