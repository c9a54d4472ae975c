"""Diagram evaluation, framing normalization, and the invariance harness."""

import pytest

from qtangle.intertwiner import Intertwiner
from qtangle.invariant import (Mode, link_invariant, normalized_invariant,
                               phi, phi_coloured, verify_invariance)
from qtangle.qseries import LaurentSeries, quantum_integer
from qtangle.tangle import MoveKind, cable, parse, random_link

PREC = 32

UNKNOT = "bottom\ncup 1 {m} u\ncap 1\n"


def unknot(m: int) -> str:
    return UNKNOT.format(m=m)


class TestPhi:
    def test_identity_strand(self):
        d = cable(parse("bottom +1\n"))
        assert phi(d).eq_upto(Intertwiner.identity((1,)))

    def test_circle(self):
        d = cable(parse(unknot(1)))
        assert phi(d).scalar().eq_upto(quantum_integer(2).scale(-1))

    def test_rejects_coloured_input(self):
        with pytest.raises(ValueError):
            phi(parse("bottom +2 -2\ncap 1\n"))


class TestColouredUnknots:
    """Closed colour-m circles evaluate to (-1)^m [m+1]."""

    @pytest.mark.parametrize("m,sign", [(1, -1), (2, 1), (3, -1)])
    def test_values(self, m, sign):
        val = link_invariant(parse(unknot(m)), PREC)
        assert val.eq_upto(quantum_integer(m + 1).scale(sign))

    def test_two_component_mixed(self):
        d = parse("bottom\ncup 1 1 u\ncup 3 2 u\ncap 3\ncap 1\n")
        val = link_invariant(d, PREC)
        expected = (quantum_integer(2) * quantum_integer(3)).scale(-1)
        assert val.eq_upto(expected)

    def test_link_invariant_requires_closed_diagram(self):
        with pytest.raises(ValueError):
            link_invariant(parse("bottom +1\n"))


class TestFramingCalibration:
    def test_positive_curl_normalizes_to_identity(self):
        d = parse("bottom +1\ncup 2 1 u\npos 1\ncap 2\n")
        res = normalized_invariant(d, PREC)
        assert res.gamma == 1
        assert res.value.eq_upto(Intertwiner.identity((1,)))

    def test_negative_curl_normalizes_to_identity(self):
        d = parse("bottom +1\ncup 2 1 u\nneg 1\ncap 2\n")
        res = normalized_invariant(d, PREC)
        assert res.gamma == -1
        assert res.value.eq_upto(Intertwiner.identity((1,)))

    def test_raw_curl_is_q_cubed(self):
        d = parse("bottom +1\ncup 2 1 u\npos 1\ncap 2\n")
        raw = phi_coloured(d, PREC)
        expected = Intertwiner.identity((1,)).scale(LaurentSeries.monomial(-3))
        assert raw.eq_upto(expected)

    def test_flipped_sign_convention_breaks_calibration(self):
        d = parse("bottom +1\ncup 2 1 u\npos 1\ncap 2\n")
        res = normalized_invariant(d, PREC, flip_gamma_sign=True)
        assert not res.value.eq_upto(Intertwiner.identity((1,)))


class TestModes:
    @pytest.mark.parametrize("text", [
        "bottom +2\ncup 2 2 u\npos 1\ncap 2\n",
        "bottom\ncup 1 2 u\ncap 1\n",
        "bottom +1 -1\ncup 2 2 d\npos 1\nneg 1\ncap 2\n",
    ])
    def test_global_equals_sliced(self, text):
        d = parse(text)
        a = phi_coloured(d, PREC, Mode.GLOBAL)
        b = phi_coloured(d, PREC, Mode.SLICED)
        assert a.eq_upto(b)


class TestIntegrality:
    def test_sample_random_links(self):
        for seed in (1, 2, 3):
            d = random_link(3, 2, seed, max_width=6)
            assert link_invariant(d, 24).is_integral()


class TestHarness:
    def test_uncoloured_batch_all_pass(self):
        reports = verify_invariance(
            colours=1, trials=8,
            moves=(MoveKind.UNCOLOURED_R1, MoveKind.R2, MoveKind.R3),
            precision=24, seed=7, n_slices=5, max_strands=6)
        assert len(reports) == 8
        assert all(r.ok for r in reports)

    def test_coloured_batch_all_pass(self):
        reports = verify_invariance(
            colours=2, trials=4,
            moves=(MoveKind.KINK_PAIR, MoveKind.R2, MoveKind.ZIGZAG),
            precision=24, seed=11, n_slices=3, max_strands=6)
        assert all(r.ok for r in reports)

    def test_flipped_convention_fails_on_curls(self):
        reports = verify_invariance(
            colours=1, trials=12, moves=(MoveKind.UNCOLOURED_R1,),
            precision=24, seed=3, n_slices=4, max_strands=4,
            flip_gamma_sign=True)
        assert any(not r.ok for r in reports)

    def test_determinism(self):
        kw = dict(colours=1, trials=5, moves=(MoveKind.R2,),
                  precision=24, seed=42, n_slices=4, max_strands=5)
        assert verify_invariance(**kw) == verify_invariance(**kw)
