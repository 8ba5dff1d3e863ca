"""Exact row reduction over the rationals.

Vectors are dicts keyed by hashable column labels with Fraction values;
a reduction is carried out against an explicit column order so callers
can steer which coordinates get eliminated first (needed for reading
off filtration-level subspaces from the echelon rows).
"""

from fractions import Fraction


def _clean(vec):
    return {c: x for c, x in vec.items() if x != 0}


class RowSpace:
    """Incremental reduced row-echelon basis over Fraction.

    columns are compared with the key function given at construction;
    smaller key = eliminated first (leftmost).
    """

    def __init__(self, column_key=None):
        self.column_key = column_key if column_key is not None else (lambda c: c)
        self.rows = []      # reduced rows, each a dict col -> Fraction
        self.pivots = []    # pivot column of each row

    def _pivot_of(self, vec):
        return min(vec, key=self.column_key)

    def reduce(self, vec):
        """Return vec reduced against the current basis (not inserted)."""
        vec = _clean(dict(vec))
        for row, piv in zip(self.rows, self.pivots):
            if piv in vec:
                coef = vec[piv]
                for c, x in row.items():
                    vec[c] = vec.get(c, Fraction(0)) - coef * x
                    if vec[c] == 0:
                        del vec[c]
        return vec

    def insert(self, vec):
        """Reduce and insert; returns True if the row was new (rank grew)."""
        vec = self.reduce(vec)
        if not vec:
            return False
        piv = self._pivot_of(vec)
        lead = vec[piv]
        vec = {c: x / lead for c, x in vec.items()}
        # back-substitute into existing rows to keep the basis reduced
        for idx, (row, rpiv) in enumerate(zip(self.rows, self.pivots)):
            if piv in row:
                coef = row[piv]
                new = dict(row)
                for c, x in vec.items():
                    new[c] = new.get(c, Fraction(0)) - coef * x
                    if new[c] == 0:
                        del new[c]
                self.rows[idx] = new
        self.rows.append(vec)
        self.pivots.append(piv)
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.rows)

    def sorted_rows(self):
        order = sorted(range(len(self.rows)), key=lambda i: self.column_key(self.pivots[i]))
        return [self.rows[i] for i in order]


def rank(vectors, column_key=None):
    space = RowSpace(column_key)
    for v in vectors:
        space.insert(v)
    return space.rank


def same_span(vecs_a, vecs_b, column_key=None):
    """Exact row-space equality of two spanning lists."""
    sa = RowSpace(column_key)
    for v in vecs_a:
        sa.insert(v)
    sb = RowSpace(column_key)
    for v in vecs_b:
        sb.insert(v)
    if sa.rank != sb.rank:
        return False
    return all(sa.contains(v) for v in vecs_b) and all(sb.contains(v) for v in vecs_a)
