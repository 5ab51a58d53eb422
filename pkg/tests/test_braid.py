import pytest
from hypothesis import given

from knotsurgery.braid import (
    Braid,
    closure_components,
    connected_sum,
    format_braid,
    minus,
    mirror,
    parse_braid,
    reverse,
    stabilize,
)
from knotsurgery.errors import BraidSyntaxError, ComponentError, GeneratorIndexError
from knotsurgery.table import bundled_table, parse_table
from knotsurgery.errors import SchemaError
from strategies import braids, knot_braids

TREFOIL = Braid(2, ((1, 1),) * 3)


class TestParse:
    def test_trefoil(self):
        assert parse_braid("B2: s1 s1 s1") == TREFOIL

    def test_figure_eight(self):
        assert parse_braid("B3: s1 s2^-1 s1 s2^-1") == Braid(3, ((1, 1), (2, -1), (1, 1), (2, -1)))

    def test_empty_word(self):
        assert parse_braid("B1:") == Braid(1, ())
        assert parse_braid("  B4:   ") == Braid(4, ())

    def test_index_error(self):
        with pytest.raises(GeneratorIndexError):
            parse_braid("B2: s3")
        with pytest.raises(GeneratorIndexError):
            parse_braid("B2: s2")
        with pytest.raises(GeneratorIndexError):
            parse_braid("B3: s0")

    @pytest.mark.parametrize("text", [
        "B2 s1", "2: s1", "B2: s1^-2", "B2: s1^1", "B2: S1", "B2: s", "B2: s1,s1", "",
    ])
    def test_syntax_error(self, text):
        with pytest.raises(BraidSyntaxError):
            parse_braid(text)

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_braid("garbage")

    @given(braids(max_strands=6, max_len=12))
    def test_round_trip(self, b):
        assert parse_braid(format_braid(b)) == b


class TestClosureComponents:
    @pytest.mark.parametrize("b, expected", [
        (Braid(1, ()), 1),
        (Braid(2, ((1, 1),)), 1),
        (Braid(2, ()), 2),
        (Braid(3, ((1, 1), (1, -1))), 3),
        (Braid(3, ((1, 1), (2, -1))), 1),
        (Braid(4, ((1, 1), (3, 1))), 2),
    ])
    def test_examples(self, b, expected):
        assert closure_components(b) == expected

    @given(braids())
    def test_invariant_under_mirror_and_reverse(self, b):
        n = closure_components(b)
        assert closure_components(mirror(b)) == n
        assert closure_components(reverse(b)) == n


class TestSymmetries:
    def test_mirror_examples(self):
        assert mirror(TREFOIL) == Braid(2, ((1, -1),) * 3)
        assert mirror(Braid(1)) == Braid(1)

    def test_reverse_examples(self):
        assert reverse(Braid(3, ((1, 1), (2, -1)))) == Braid(3, ((2, -1), (1, 1)))
        assert reverse(Braid(1)) == Braid(1)

    @given(braids())
    def test_involutions(self, b):
        assert mirror(mirror(b)) == b
        assert reverse(reverse(b)) == b
        assert minus(minus(b)) == b


class TestConnectedSum:
    def test_trefoil_minus_trefoil(self):
        s = connected_sum(TREFOIL, mirror(TREFOIL))
        assert s == Braid(3, ((1, 1),) * 3 + ((2, -1),) * 3)

    def test_unknot_is_identity_on_word(self):
        assert connected_sum(Braid(1), TREFOIL) == TREFOIL
        assert connected_sum(TREFOIL, Braid(1)) == TREFOIL

    def test_rejects_links(self):
        with pytest.raises(ComponentError):
            connected_sum(Braid(2), TREFOIL)
        with pytest.raises(ComponentError):
            connected_sum(TREFOIL, Braid(3, ((1, 1),)))

    @given(knot_braids(), knot_braids())
    def test_result_is_knot(self, a, b):
        s = connected_sum(a, b)
        assert s.strands == a.strands + b.strands - 1
        assert closure_components(s) == 1

    @given(knot_braids())
    def test_stabilization_keeps_knot(self, b):
        assert closure_components(stabilize(b)) == 1
        assert closure_components(stabilize(b, -1)) == 1


class TestTable:
    def test_bundled_contents(self):
        table = bundled_table()
        names = table.names()
        for required in ["unknot", "trefoil", "figure-eight", "cinquefoil", "granny", "square"]:
            assert required in names
        assert table.get("cinquefoil") == parse_braid("B2: s1 s1 s1 s1 s1")

    def test_composites_are_connected_sums(self):
        table = bundled_table()
        trefoil = table.get("trefoil")
        assert table.get("granny") == connected_sum(trefoil, trefoil)
        assert table.get("square") == connected_sum(trefoil, minus(trefoil))

    def test_parse_skips_comments_and_blanks(self):
        table = parse_table("# header\n\ntrefoil\tB2: s1 s1 s1\n  # indented comment\n")
        assert table.names() == ["trefoil"]

    def test_duplicate_names(self):
        with pytest.raises(SchemaError):
            parse_table("a\tB1:\na\tB2: s1\n")

    def test_missing_tab(self):
        with pytest.raises(SchemaError):
            parse_table("trefoil B2: s1 s1 s1\n")

    def test_link_entry_names_offender(self):
        with pytest.raises(ComponentError, match="hopf"):
            parse_table("trefoil\tB2: s1 s1 s1\nhopf\tB2: s1 s1\n")

    def test_bad_braid_names_offender(self):
        with pytest.raises(GeneratorIndexError, match="broken"):
            parse_table("broken\tB2: s5\n")

    def test_with_mirrors_interleaves(self):
        table = parse_table("trefoil\tB2: s1 s1 s1\n").with_mirrors()
        assert table.names() == ["trefoil", "trefoil-mr"]
        assert table.get("trefoil-mr") == minus(TREFOIL)
