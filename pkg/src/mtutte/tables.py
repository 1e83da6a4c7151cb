"""CSV reproductions of the worked-example tables.

Layouts 1 and 4 list every subset under the Dawson interval holding it, with
its derivative cell ``(p, q) = (cr', nl)`` and generating-function term.
Layouts 2 and 5 list activity profiles with the five-variable monomial.
Layout 3 lists the first summand of each of the nine expansion families.
Rows are ordered by witness in colex order (1, 4) or by size then
position (2, 3, 5).
"""

from __future__ import annotations

import csv
import io

from .matroid import subset_key
from .perspective import Perspective, dawson_partition
from .poly import Polynomial, canonical_text
from .tutte import SYMBOLS

INTERVAL_HEADER = ["witness", "int", "ext", "bottom", "top", "subset", "p", "q", "term"]
PROFILE_HEADER = ["subset", "Int", "P", "Ext", "Q", "iota", "cr", "eps", "nl", "rcd", "monomial"]
FAMILY_HEADER = ["subset", "cr", "iota", "nl", "eps"] + [f"({f})" for f in SYMBOLS]


def _term(**exps) -> str:
    return canonical_text(Polynomial.monomial(1, **{k: e for k, e in exps.items() if e}))


def interval_rows(p: Perspective) -> list[list[str]]:
    g = p.ground
    rows = []
    for iv in sorted(dawson_partition(p), key=lambda iv: iv.witness):
        wp = p.profile(iv.witness)
        for a in sorted(iv.members(), key=subset_key):
            pr = p.profile(a)
            rows.append([
                g.fmt(iv.witness), g.fmt(wp.int_active), g.fmt(wp.ext_active),
                g.fmt(iv.bottom), g.fmt(iv.top), g.fmt(a),
                str(pr.cr), str(pr.nl), _term(x=pr.iota, y=pr.eps, z=pr.rcd),
            ])
    return rows


def profile_rows(p: Perspective) -> list[list[str]]:
    g = p.ground
    rows = []
    for a in sorted(range(1 << p.n), key=subset_key):
        pr = p.profile(a)
        rows.append(
            [g.fmt(a), g.fmt(pr.int_active), g.fmt(pr.p_set), g.fmt(pr.ext_active), g.fmt(pr.q_set)]
            + [str(s) for s in (pr.iota, pr.cr, pr.eps, pr.nl, pr.rcd)]
            + [_term(x=pr.iota, u=pr.cr, y=pr.eps, v=pr.nl, z=pr.rcd)]
        )
    return rows


def family_rows(p: Perspective) -> list[list[str]]:
    g = p.ground
    firsts = [syms[0] for syms in SYMBOLS.values()]
    rows = []
    for a in sorted(range(1 << p.n), key=subset_key):
        pr = p.profile(a)
        cells = []
        for sym in firsts:
            t = sym.term(pr)
            cells.append(canonical_text(t) if t else "")
        rows.append([g.fmt(a), str(pr.cr), str(pr.iota), str(pr.nl), str(pr.eps)] + cells)
    return rows


LAYOUTS = {
    1: (INTERVAL_HEADER, interval_rows),
    2: (PROFILE_HEADER, profile_rows),
    3: (FAMILY_HEADER, family_rows),
    4: (INTERVAL_HEADER, interval_rows),
    5: (PROFILE_HEADER, profile_rows),
}


def table(p: Perspective, which: int) -> tuple[list[str], list[list[str]]]:
    if which not in LAYOUTS:
        raise ValueError(f"table must be one of 1-5, not {which!r}")
    header, build = LAYOUTS[which]
    return list(header), build(p)


def table_csv(p: Perspective, which: int) -> str:
    header, rows = table(p, which)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()
