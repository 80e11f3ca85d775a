"""Named tables reproduced by `gencluster table`, each with a golden file."""

from dataclasses import dataclass
from importlib import resources
from typing import Callable, List, Tuple

from .clusters import cluster_polynomial
from .core import EULER_DESCENT, UNIVERSAL, Pattern, joint
from .egf import gf_closed
from .families import (GAMMA_TAU, P1423, Q162534, a_k3_cluster_poly, a_k3_gc_poly,
                       a_k3_pattern, downup_family_polys, identity_pattern,
                       joint_family_polys)


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    build: Callable[[], List[Tuple[str, object]]]

    def rows(self):
        return self.build()

    def golden_path(self):
        return resources.files("gencluster") / "data" / "goldens" / (self.name + ".txt")

    def golden(self):
        text = self.golden_path().read_text(encoding="utf-8")
        return [ln for ln in text.split("\n") if ln]


def _series_rows(series, ms):
    return [(str(m), series[m]) for m in ms]


def _gt_series():
    order = 11
    s = gf_closed(0, 0, 3, [GAMMA_TAU], EULER_DESCENT, order, "family")
    for j in (1, 2):
        s = s + gf_closed(0, j, 3, [GAMMA_TAU], EULER_DESCENT, order, "family")
    return _series_rows(s, range(order + 1))


def _du(i, j, order, ms):
    return _series_rows(gf_closed(i, j, 2, [a_k3_pattern(2)], EULER_DESCENT, order, "family"), ms)


def _du_combined():
    order = 10
    a = gf_closed(1, 0, 2, [a_k3_pattern(2)], EULER_DESCENT, order, "family")
    b = gf_closed(1, 1, 2, [a_k3_pattern(2)], EULER_DESCENT, order, "family")
    return _series_rows(a + b, range(1, order + 1))


def _joint_ud(i, j, order, ms):
    g = joint(P1423, Q162534)
    return _series_rows(gf_closed(i, j, 2, g, EULER_DESCENT, order, "family"), ms)


def _joint_ud_combined():
    g = joint(P1423, Q162534)
    s = gf_closed(0, 0, 2, g, EULER_DESCENT, 10, "family") + \
        gf_closed(0, 1, 2, g, EULER_DESCENT, 10, "family")
    return _series_rows(s, range(11))


def _pkm(k, m, order, ms):
    g = joint(identity_pattern(k, m), identity_pattern(k, m + 1))
    return _series_rows(gf_closed(0, 0, k, g, UNIVERSAL, order, "family"), ms)


def _dist(k, nmax):
    s = gf_closed(0, 0, k, [a_k3_pattern(k)], EULER_DESCENT, k * nmax, "family")
    return [(str(n), s[k * n]) for n in range(1, nmax + 1)]


PRESETS = {p.name: p for p in [
    Preset("ak3-c", "cluster polynomials of A_{k,3} on n = 1..10 columns (any k >= 2)",
           lambda: [(str(n), a_k3_cluster_poly(3, n)) for n in range(1, 11)]),
    Preset("a33-gc", "generalized clusters of A_{3,3}, Euler relation, n = 1..8",
           lambda: [(str(n), a_k3_gc_poly(3, n)) for n in range(1, 9)]),
    Preset("a23-gc", "generalized clusters of A_{2,3}, Euler relation, n = 1..8",
           lambda: [(str(n), a_k3_gc_poly(2, n)) for n in range(1, 9)]),
    Preset("a33-dist", "A_{3,3}-matches over Euler fillings with 3n cells, n = 1..7",
           lambda: _dist(3, 7)),
    Preset("a23-dist", "A_{2,3}-matches over Euler fillings with 2n cells, n = 1..7",
           lambda: _dist(2, 7)),
    Preset("du-gc", "down-up GC by cell count 2..16",
           lambda: [(str(2 * n), downup_family_polys("GC", n)) for n in range(1, 9)]),
    Preset("du-gsc", "down-up GSC by cell count 1..17",
           lambda: [(str(2 * n + 1), downup_family_polys("GSC", n)) for n in range(0, 9)]),
    Preset("du-gec", "down-up GEC by cell count 1..17",
           lambda: [(str(2 * n + 1), downup_family_polys("GEC", n)) for n in range(0, 9)]),
    Preset("du-gsec", "down-up GSEC by cell count 2..18",
           lambda: [(str(2 * n + 2), downup_family_polys("GSEC", n)) for n in range(0, 9)]),
    Preset("du-a", "162534-matches in odd down-up permutations, lengths 1..11",
           lambda: _du(1, 0, 11, range(1, 12, 2))),
    Preset("du-b", "162534-matches in even down-up permutations, lengths 2..12",
           lambda: _du(1, 1, 12, range(2, 13, 2))),
    Preset("du-combined", "162534-matches in down-up permutations, lengths 1..10",
           _du_combined),
    Preset("gt-series", "124356-matches over height-3 Euler fillings, lengths 0..11",
           _gt_series),
    Preset("joint-12-123", "joint 12/123 matches in permutations, lengths 0..6",
           lambda: _pkm(1, 2, 6, range(7))),
    Preset("joint-p22-p23", "joint P_{2,2}/P_{2,3} matches in height-2 fillings, 0..10",
           lambda: _pkm(2, 2, 10, range(0, 11, 2))),
    Preset("jud-gc", "joint 1423/162534 GC by cell count 2..12",
           lambda: [(str(2 * n), joint_family_polys("joint-ud", "GC", n))
                    for n in range(1, 7)]),
    Preset("jud-gec", "joint 1423/162534 GEC by cell count 1..13",
           lambda: [(str(2 * n + 1), joint_family_polys("joint-ud", "GEC", n))
                    for n in range(0, 7)]),
    Preset("jud-a", "joint 1423/162534 in even up-down permutations, lengths 0..10",
           lambda: _joint_ud(0, 0, 10, range(0, 11, 2))),
    Preset("jud-b", "joint 1423/162534 in odd up-down permutations, lengths 1..11",
           lambda: _joint_ud(0, 1, 11, range(1, 12, 2))),
    Preset("jud-combined", "joint 1423/162534 in up-down permutations, lengths 0..10",
           _joint_ud_combined),
    Preset("perm-132", "cluster polynomials of 132 on 2n+1 letters, n = 1..5",
           lambda: [(str(2 * n + 1), cluster_polynomial(1, 2 * n + 1,
                                                        [Pattern.from_word("132", 1)]))
                    for n in range(1, 6)]),
    Preset("perm-1234", "cluster polynomial of 1234 on 7 letters",
           lambda: [("7", cluster_polynomial(1, 7, [Pattern.from_word("1234", 1)]))]),
]}
